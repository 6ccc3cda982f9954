#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace ptok::test {

// Published tokenizer results on the 399152-token treebank split, as
// printed (percentages). Hybrid rows follow the single-tool rows.
struct PublishedRow {
  std::string_view name;
  std::uint64_t errors;
  double errors_fixed;
  double precision;
  double recall;
  double f1;
  double accuracy;
};

inline constexpr std::uint64_t kBaselineErrors = 41669;

inline constexpr std::array<PublishedRow, 15> kPublishedRows = {{
    {"Stanza", 41922, -0.06, 89.50, 100.00, 94.46, 89.50},
    {"Trankit", 41828, -0.03, 89.51, 100.00, 94.47, 89.51},
    {"SetPer", 41800, -0.03, 89.53, 100.00, 94.47, 89.53},
    {"Space Delimiter", 41669, 0.00, 89.56, 100.00, 94.50, 89.56},
    {"Parsivar (no normalizer)", 41669, 0.00, 89.56, 100.00, 94.50, 89.56},
    {"Bound Morphemes", 33161, 20.42, 91.64, 99.98, 95.63, 91.63},
    {"Hazm (no normalizer)", 31080, 25.41, 92.21, 99.99, 95.94, 92.20},
    {"FarsiVerb", 22301, 46.48, 94.48, 99.92, 97.12, 94.40},
    {"Parsivar", 18122, 56.50, 97.05, 98.23, 97.634, 95.38},
    {"Hazm", 9787, 76.51, 97.57, 99.97, 98.75, 97.54},
    {"FarsiVerb + BM", 15683, 62.36, 96.16, 99.89, 97.99, 96.06},
    {"Parsivar + FarsiVerb", 10554, 74.63, 99.09, 98.63, 98.64, 97.30},
    {"Hazm + FarsiVerb", 9159, 78.01, 97.79, 99.90, 98.84, 97.70},
    {"Hazm + BM", 8715, 78.85, 97.85, 99.96, 98.89, 97.81},
    {"Hazm + BM + FarsiVerb", 8097, 80.56, 98.07, 99.89, 98.97, 97.96},
}};

}  // namespace ptok::test

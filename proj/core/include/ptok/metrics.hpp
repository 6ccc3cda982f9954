#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptok/align.hpp"
#include "ptok/error.hpp"

namespace ptok {

// Scores are fractions in [0, 1]; reports print them as percentages.
struct MetricsRow {
  std::string name;
  AlignmentCounts counts;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  double accuracy = 0;
  std::optional<double> errors_fixed_pct;  // relative to a baseline run
  double time_s = 0;
  std::vector<std::string> warnings;

  bool operator==(const MetricsRow&) const = default;
};

class UndefinedBaselineError : public Error {
 public:
  using Error::Error;
};

// Harmonic mean; 0 when both inputs are 0.
double f1_score(double precision, double recall);

// Accuracy implied by precision and recall when TN = 0:
// (TP) / (TP + FP + FN) = 1 / (1/p + 1/r - 1). 0 when p or r is 0.
double accuracy_from_pr(double precision, double recall);

// precision = TP/(TP+FP), recall = TP/(TP+FN),
// accuracy = (TN+TP)/(TP+TN+FN+FP), f1 = 2pr/(p+r).
// Zero denominators give 0 and a warning.
MetricsRow metrics(const AlignmentCounts& counts, std::string name, double time_s = 0);

// 100 * (baseline - errors) / baseline. Throws UndefinedBaselineError when
// baseline_errors is 0.
double errors_fixed(std::uint64_t baseline_errors, std::uint64_t errors);

struct Finding {
  std::string field;
  double reported = 0;
  double recomputed = 0;
  std::string message;
};

// Recomputes accuracy from precision/recall with TN = 0 and F1 from
// precision/recall; reports any field off by more than `tolerance`
// (fractions, so 0.0005 = 0.05 percentage points).
std::vector<Finding> consistency_check(const MetricsRow& row, double tolerance = 0.0005);

}  // namespace ptok

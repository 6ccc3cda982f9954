#pragma once

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "ptok/metrics.hpp"

namespace ptok {

void to_json(nlohmann::json& j, const AlignmentCounts& c);
void from_json(const nlohmann::json& j, AlignmentCounts& c);
void to_json(nlohmann::json& j, const MetricsRow& row);
void from_json(const nlohmann::json& j, MetricsRow& row);

// Columns: name, errors, errors fixed %, precision %, recall %, F1 %,
// accuracy %, time (s). Percentages to two decimals.
std::string format_table(std::span<const MetricsRow> rows);
std::string format_csv(std::span<const MetricsRow> rows);
std::string format_json(std::span<const MetricsRow> rows);

}  // namespace ptok

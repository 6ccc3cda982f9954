#include "ptok/metrics.hpp"

#include <cmath>
#include <sstream>

namespace ptok {
namespace {

double ratio(std::uint64_t num, std::uint64_t den, std::string_view what, std::vector<std::string>& warnings) {
  if (den == 0) {
    warnings.push_back(std::string(what) + ": zero denominator, reported as 0");
    return 0.0;
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

double f1_score(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0 ? 2.0 * precision * recall / sum : 0.0;
}

double accuracy_from_pr(double precision, double recall) {
  if (precision <= 0 || recall <= 0) return 0.0;
  return 1.0 / (1.0 / precision + 1.0 / recall - 1.0);
}

MetricsRow metrics(const AlignmentCounts& counts, std::string name, double time_s) {
  MetricsRow row;
  row.name = std::move(name);
  row.counts = counts;
  row.time_s = time_s;
  row.precision = ratio(counts.tp, counts.tp + counts.fp, "precision", row.warnings);
  row.recall = ratio(counts.tp, counts.tp + counts.fn, "recall", row.warnings);
  row.accuracy = ratio(counts.tn + counts.tp, counts.tp + counts.tn + counts.fn + counts.fp, "accuracy", row.warnings);
  row.f1 = f1_score(row.precision, row.recall);
  return row;
}

double errors_fixed(std::uint64_t baseline_errors, std::uint64_t errors) {
  if (baseline_errors == 0) throw UndefinedBaselineError("errors fixed is undefined for a baseline with 0 errors");
  return 100.0 * (static_cast<double>(baseline_errors) - static_cast<double>(errors)) /
         static_cast<double>(baseline_errors);
}

std::vector<Finding> consistency_check(const MetricsRow& row, double tolerance) {
  std::vector<Finding> findings;
  auto check = [&](std::string field, double reported, double recomputed) {
    if (std::abs(reported - recomputed) > tolerance) {
      std::ostringstream msg;
      msg << field << " " << reported << " differs from " << recomputed << " recomputed from precision/recall";
      findings.push_back({std::move(field), reported, recomputed, msg.str()});
    }
  };
  check("accuracy", row.accuracy, accuracy_from_pr(row.precision, row.recall));
  check("f1", row.f1, f1_score(row.precision, row.recall));
  return findings;
}

}  // namespace ptok

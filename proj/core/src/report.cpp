#include "ptok/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <vector>

namespace ptok {
namespace {

std::string pct(double fraction) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << fraction * 100.0;
  return out.str();
}

std::string fixed2(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << value;
  return out.str();
}

std::vector<std::string> cells(const MetricsRow& r) {
  return {r.name,
          std::to_string(r.counts.errors),
          r.errors_fixed_pct ? fixed2(*r.errors_fixed_pct) : "-",
          pct(r.precision),
          pct(r.recall),
          pct(r.f1),
          pct(r.accuracy),
          fixed2(r.time_s)};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// Display width in code points (good enough for aligned text tables).
std::size_t width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

}  // namespace

void to_json(nlohmann::json& j, const AlignmentCounts& c) {
  j = {{"tp", c.tp},   {"fp", c.fp},   {"fn", c.fn}, {"errors", c.errors}, {"gold_tokens", c.gold_tokens},
       {"sys_tokens", c.sys_tokens}, {"tn", c.tn}};
}

void from_json(const nlohmann::json& j, AlignmentCounts& c) {
  j.at("tp").get_to(c.tp);
  j.at("fp").get_to(c.fp);
  j.at("fn").get_to(c.fn);
  j.at("errors").get_to(c.errors);
  j.at("gold_tokens").get_to(c.gold_tokens);
  j.at("sys_tokens").get_to(c.sys_tokens);
  c.tn = j.value("tn", std::uint64_t{0});
}

void to_json(nlohmann::json& j, const MetricsRow& r) {
  j = {{"name", r.name},
       {"errors", r.counts.errors},
       {"errors_fixed_pct", r.errors_fixed_pct ? nlohmann::json(*r.errors_fixed_pct) : nlohmann::json(nullptr)},
       {"precision", r.precision},
       {"recall", r.recall},
       {"f1", r.f1},
       {"accuracy", r.accuracy},
       {"time_s", r.time_s},
       {"counts", r.counts},
       {"warnings", r.warnings}};
}

void from_json(const nlohmann::json& j, MetricsRow& r) {
  j.at("name").get_to(r.name);
  j.at("counts").get_to(r.counts);
  j.at("precision").get_to(r.precision);
  j.at("recall").get_to(r.recall);
  j.at("f1").get_to(r.f1);
  j.at("accuracy").get_to(r.accuracy);
  j.at("time_s").get_to(r.time_s);
  const auto& fixed = j.at("errors_fixed_pct");
  r.errors_fixed_pct = fixed.is_null() ? std::nullopt : std::optional<double>(fixed.get<double>());
  r.warnings = j.value("warnings", std::vector<std::string>{});
}

std::string format_table(std::span<const MetricsRow> rows) {
  const std::vector<std::string> header = {"Tokenizer", "#Errors",  "Errors Fixed(%)", "Precision(%)",
                                           "Recall(%)", "F1(%)",    "Accuracy(%)",     "Time(s)"};
  std::vector<std::vector<std::string>> table = {header};
  for (const auto& r : rows) table.push_back(cells(r));
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], width(line[i]));
  }
  std::ostringstream out;
  for (const auto& line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      const std::size_t pad = widths[i] - width(line[i]);
      if (i == 0) {
        out << line[i] << std::string(pad, ' ');
      } else {
        out << "  " << std::string(pad, ' ') << line[i];
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string format_csv(std::span<const MetricsRow> rows) {
  std::ostringstream out;
  out << "name,errors,errors_fixed_pct,precision_pct,recall_pct,f1_pct,accuracy_pct,time_s\n";
  for (const auto& r : rows) {
    const auto c = cells(r);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(i == 2 && c[i] == "-" ? std::string() : c[i]);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_json(std::span<const MetricsRow> rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows) j.push_back(r);
  return j.dump(2) + "\n";
}

}  // namespace ptok

#include "ptok/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

#include "ptok/error.hpp"
#include "ptok/report.hpp"

namespace ptok::cli {
namespace {

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  if (in.bad()) throw IoError("read failed: " + path.string());
  return lines;
}

}  // namespace

std::filesystem::path default_lexicon_dir(const std::optional<std::filesystem::path>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kLexiconEnv); env && *env) return env;
  return {};
}

Lexicon load_lexicon_or_builtin(const std::filesystem::path& dir) {
  return dir.empty() ? builtin_lexicon() : load_lexicon(dir);
}

PrepareResult prepare_corpus(const GoldCorpus& gold, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  PrepareResult result;
  result.stats = corpus_stats(gold);
  result.gold_lines = out_dir / "gold.lines";
  result.input_text = out_dir / "input.txt";
  emit_token_lines(gold, result.gold_lines);
  std::string text;
  for (const auto& line : corrupt(gold)) text.append(line).push_back('\n');
  write_text(result.input_text, text);
  return result;
}

PrepareResult cmd_prepare(const std::filesystem::path& dataset, const std::filesystem::path& out_dir,
                          std::size_t token_column) {
  return prepare_corpus(read_dependency_file(dataset, token_column), out_dir);
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json stages = nlohmann::json::object();
  for (const StageSpec& s : spec.stages) stages[std::string(to_string(s.id))] = timings.seconds(s.id);
  stages["split"] = timings.seconds(StageId::split);
  auto paths = [](const std::vector<std::filesystem::path>& ps) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : ps) a.push_back(p.string());
    return a;
  };
  return {
      {"pipeline", {{"name", spec.name}, {"config", spec.serialize()}}},
      {"inputs", paths(inputs)},
      {"outputs", paths(outputs)},
      {"seed", seed ? nlohmann::json(*seed) : nlohmann::json(nullptr)},
      {"started_at", started_at},
      {"finished_at", finished_at},
      {"threads", threads},
      {"tokens", tokens},
      {"sentences", sentences},
      {"timings", {{"total_s", total_s}, {"stages_s", stages}}},
  };
}

RunManifest cmd_tokenize(const std::filesystem::path& input, const PipelineSpec& spec,
                         const std::filesystem::path& out, const TokenizeOptions& options) {
  RunManifest manifest;
  manifest.spec = spec;
  manifest.seed = options.seed;
  manifest.threads = std::max(1u, options.threads);
  const Pipeline pipeline(spec);
  const std::vector<std::string> lines = read_lines(input);

  manifest.started_at = utc_now();
  const auto start = std::chrono::steady_clock::now();
  const TokenStream stream = pipeline.run_parallel(lines, manifest.threads, &manifest.timings);
  manifest.total_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  manifest.finished_at = utc_now();

  emit_token_lines(stream, out);
  manifest.tokens = stream.size();
  manifest.sentences = stream.sentence_count();
  manifest.inputs = {input};
  if (!spec.lexicon_dir.empty()) manifest.inputs.push_back(spec.lexicon_dir);
  const auto manifest_path = options.manifest_path.value_or(std::filesystem::path(out.string() + ".manifest.json"));
  manifest.outputs = {out, manifest_path};
  write_text(manifest_path, manifest.to_json().dump(2) + "\n");
  return manifest;
}

MetricsRow cmd_evaluate(const std::filesystem::path& gold, const std::filesystem::path& sys, AlignMode mode,
                        std::string name, std::optional<std::uint64_t> baseline_errors) {
  const auto start = std::chrono::steady_clock::now();
  const AlignmentCounts counts = align_files(gold, sys, mode);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MetricsRow row = metrics(counts, std::move(name), seconds);
  if (baseline_errors) row.errors_fixed_pct = errors_fixed(*baseline_errors, counts.errors);
  return row;
}

std::vector<MetricsRow> cmd_compare(const std::filesystem::path& gold,
                                    const std::vector<std::pair<std::string, std::filesystem::path>>& runs,
                                    const std::string& baseline_name, AlignMode mode) {
  std::set<std::string> names;
  for (const auto& [name, path] : runs) {
    if (!names.insert(name).second) throw ConfigError("duplicate run name '" + name + "'");
  }
  if (!names.count(baseline_name)) throw ConfigError("baseline '" + baseline_name + "' is not among the runs");

  std::vector<MetricsRow> rows;
  for (const auto& [name, path] : runs) rows.push_back(cmd_evaluate(gold, path, mode, name));
  const auto base = std::find_if(rows.begin(), rows.end(), [&](const MetricsRow& r) { return r.name == baseline_name; });
  const std::uint64_t baseline_errors = base->counts.errors;
  for (auto& row : rows) {
    if (baseline_errors > 0) {
      row.errors_fixed_pct = errors_fixed(baseline_errors, row.counts.errors);
    } else {
      row.warnings.push_back("baseline has no errors; errors fixed undefined");
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const MetricsRow& a, const MetricsRow& b) { return a.counts.errors < b.counts.errors; });
  return rows;
}

void write_treebank(const GoldCorpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << "# generated fixture: " << corpus.source_path << '\n';
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
    if (i) out << '\n';
    out << "# sent_id = " << i + 1 << '\n';
    const auto& tokens = corpus.sentences[i].tokens;
    for (std::size_t t = 0; t < tokens.size(); ++t) out << t + 1 << '\t' << tokens[t] << "\t_\t_\n";
  }
  if (!out) throw IoError("write failed: " + path.string());
}

FixtureResult cmd_gen_fixture(const FixtureOptions& options, const Lexicon& lexicon,
                              const std::filesystem::path& out_dir) {
  const Fixture fx = gen_fixture(options, lexicon);
  std::filesystem::create_directories(out_dir);
  FixtureResult result;
  result.treebank = out_dir / "fixture.conll";
  write_treebank(fx.corpus, result.treebank);
  // Round-trip through the treebank reader so the outputs match `prepare`.
  result.prepared = cmd_prepare(result.treebank, out_dir, 2);
  result.truth = fx.truth;
  const nlohmann::json truth = {
      {"seed", options.seed},
      {"n_sentences", fx.truth.n_sentences},
      {"n_tokens", fx.truth.n_tokens},
      {"n_multipart", fx.truth.n_multipart},
      {"n_affixed", fx.truth.n_affixed},
      {"n_verb_groups", fx.truth.n_verb_groups},
      {"n_dictionary", fx.truth.n_dictionary},
      {"n_distinct", fx.truth.n_distinct},
      {"max_token_len", fx.truth.max_token_len},
      {"total_token_len", fx.truth.total_token_len},
      {"multiword_rate", options.multiword_rate},
  };
  write_text(out_dir / "truth.json", truth.dump(2) + "\n");
  return result;
}

Format parse_format(std::string_view text) {
  if (text == "table") return Format::table;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw ConfigError("unknown format '" + std::string(text) + "' (expected table, csv or json)");
}

std::string render(const std::vector<MetricsRow>& rows, Format format) {
  switch (format) {
    case Format::table: return format_table(rows);
    case Format::csv: return format_csv(rows);
    case Format::json: return format_json(rows);
  }
  return {};
}

}  // namespace ptok::cli

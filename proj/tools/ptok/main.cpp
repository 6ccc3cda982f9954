#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptok/align.hpp"
#include "ptok/commands.hpp"
#include "ptok/error.hpp"
#include "ptok/lexicon.hpp"

namespace {

constexpr int kRuntimeError = 1;
constexpr int kUsageError = 2;

struct Args {
  std::string dataset;
  std::string input;
  std::string out;
  std::string gold;
  std::string sys;
  std::string pipeline = "baseline";
  std::optional<std::string> lexicon_dir;
  std::optional<std::string> manifest;
  std::string mode = "strict";
  std::string format = "table";
  std::string name = "system";
  std::string baseline = "baseline";
  std::optional<std::uint64_t> baseline_errors;
  std::optional<std::uint64_t> seed;
  std::size_t token_column = 2;
  unsigned threads = 1;
  std::vector<std::string> runs;
  std::size_t sentences = 1000;
  double rate = 0.3;
};

std::pair<std::string, std::filesystem::path> parse_run(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw ptok::ConfigError("--run expects NAME=PATH, got '" + text + "'");
  }
  std::filesystem::path path = text.substr(eq + 1);
  if (!std::filesystem::is_regular_file(path)) throw ptok::ConfigError("run file not found: " + path.string());
  return {text.substr(0, eq), path};
}

std::optional<std::filesystem::path> opt_path(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return std::filesystem::path(*s);
}

int run_prepare(const Args& a) {
  const auto result = ptok::cli::cmd_prepare(a.dataset, a.out, a.token_column);
  std::cout << "gold:  " << result.gold_lines.string() << '\n'
            << "input: " << result.input_text.string() << '\n'
            << ptok::format_stats(result.stats);
  return 0;
}

int run_tokenize(const Args& a) {
  ptok::PipelineSpec spec = ptok::PipelineSpec::resolve(a.pipeline);
  if (a.lexicon_dir) {
    spec.lexicon_dir = *a.lexicon_dir;
  } else if (spec.lexicon_dir.empty()) {
    spec.lexicon_dir = ptok::cli::default_lexicon_dir(std::nullopt);
  }
  ptok::cli::TokenizeOptions options;
  options.threads = a.threads;
  options.seed = a.seed;
  options.manifest_path = opt_path(a.manifest);
  const auto manifest = ptok::cli::cmd_tokenize(a.input, spec, a.out, options);
  std::cerr << manifest.tokens << " tokens, " << manifest.sentences << " sentences in " << manifest.total_s
            << " s\n";
  return 0;
}

int run_evaluate(const Args& a) {
  const auto mode = ptok::parse_align_mode(a.mode);
  const auto format = ptok::cli::parse_format(a.format);
  const auto row = ptok::cli::cmd_evaluate(a.gold, a.sys, mode, a.name, a.baseline_errors);
  std::cout << ptok::cli::render({row}, format);
  for (const auto& w : row.warnings) std::cerr << "warning: " << w << '\n';
  return 0;
}

int run_compare(const Args& a) {
  const auto mode = ptok::parse_align_mode(a.mode);
  const auto format = ptok::cli::parse_format(a.format);
  std::vector<std::pair<std::string, std::filesystem::path>> runs;
  for (const auto& r : a.runs) runs.push_back(parse_run(r));
  const auto rows = ptok::cli::cmd_compare(a.gold, runs, a.baseline, mode);
  std::cout << ptok::cli::render(rows, format);
  for (const auto& row : rows) {
    for (const auto& w : row.warnings) std::cerr << "warning: " << row.name << ": " << w << '\n';
  }
  return 0;
}

int run_gen_fixture(const Args& a) {
  ptok::FixtureOptions options;
  options.seed = a.seed.value_or(1);
  options.n_sentences = a.sentences;
  options.multiword_rate = a.rate;
  const auto lexicon = ptok::cli::load_lexicon_or_builtin(ptok::cli::default_lexicon_dir(opt_path(a.lexicon_dir)));
  const auto result = ptok::cli::cmd_gen_fixture(options, lexicon, a.out);
  std::cout << "treebank: " << result.treebank.string() << '\n'
            << "gold:     " << result.prepared.gold_lines.string() << '\n'
            << "input:    " << result.prepared.input_text.string() << '\n'
            << ptok::format_stats(result.prepared.stats);
  return 0;
}

int run_check_lexicon(const Args& a) {
  const auto dir = ptok::cli::default_lexicon_dir(opt_path(a.lexicon_dir));
  ptok::LexiconReport load_report;
  const ptok::Lexicon lex = dir.empty() ? ptok::builtin_lexicon() : ptok::load_lexicon(dir, &load_report);
  const ptok::LexiconReport report = ptok::validate_lexicon(lex);
  std::cout << "lexicon: " << (dir.empty() ? std::string("built-in") : dir.string()) << '\n';
  for (const auto& [file, n] : report.counts) std::cout << "  " << file << ": " << n << '\n';
  for (const auto& d : load_report.duplicates) std::cout << "duplicate: " << d << '\n';
  for (const auto& v : report.violations) std::cout << "violation: " << v << '\n';
  for (const auto& m : report.ambiguities) std::cout << "ambiguity: " << m << '\n';
  return report.violations.empty() ? 0 : kRuntimeError;
}

int run_pipelines() {
  for (const auto& name : ptok::PipelineSpec::preset_names()) {
    std::cout << "# " << name << '\n' << ptok::PipelineSpec::preset(name).serialize() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persian tokenization pipelines and evaluation"};
  app.set_version_flag("--version", PTOK_VERSION);
  app.require_subcommand(1);
  Args a;

  auto* prepare = app.add_subcommand("prepare", "Write gold token lines and space-corrupted input from a treebank");
  prepare->add_option("dataset", a.dataset, "Dependency treebank file")->required()->check(CLI::ExistingFile);
  prepare->add_option("-o,--out", a.out, "Output directory")->required();
  prepare->add_option("--token-column", a.token_column, "1-based token column")->check(CLI::PositiveNumber);

  auto* tokenize = app.add_subcommand("tokenize", "Run a pipeline over raw text, one sentence per line");
  tokenize->add_option("input", a.input, "Input text")->required()->check(CLI::ExistingFile);
  tokenize->add_option("-o,--out", a.out, "Token-line output")->required();
  tokenize->add_option("--pipeline", a.pipeline, "Preset name or config file")->capture_default_str();
  tokenize->add_option("--lexicon-dir", a.lexicon_dir, "Lexicon directory (default $PTOK_LEXICON_DIR)")
      ->check(CLI::ExistingDirectory);
  tokenize->add_option("--threads", a.threads, "Worker threads")->check(CLI::PositiveNumber);
  tokenize->add_option("--seed", a.seed, "Recorded in the manifest");
  tokenize->add_option("--manifest", a.manifest, "Manifest path (default <out>.manifest.json)");

  auto* evaluate = app.add_subcommand("evaluate", "Score a token-line file against gold");
  evaluate->add_option("gold", a.gold, "Gold token lines")->required()->check(CLI::ExistingFile);
  evaluate->add_option("sys", a.sys, "System token lines")->required()->check(CLI::ExistingFile);
  evaluate->add_option("--mode", a.mode, "strict|lenient")->capture_default_str();
  evaluate->add_option("--format", a.format, "table|csv|json")->capture_default_str();
  evaluate->add_option("--name", a.name, "Row name")->capture_default_str();
  evaluate->add_option("--baseline", a.baseline_errors, "Baseline error count for errors fixed");

  auto* compare = app.add_subcommand("compare", "Score several runs against gold");
  compare->add_option("gold", a.gold, "Gold token lines")->required()->check(CLI::ExistingFile);
  compare->add_option("--run", a.runs, "NAME=PATH, repeatable")->required();
  compare->add_option("--baseline", a.baseline, "Run used for errors fixed")->capture_default_str();
  compare->add_option("--mode", a.mode, "strict|lenient")->capture_default_str();
  compare->add_option("--format", a.format, "table|csv|json")->capture_default_str();

  auto* gen = app.add_subcommand("gen-fixture", "Generate a synthetic treebank and its prepared files");
  gen->add_option("-o,--out", a.out, "Output directory")->required();
  gen->add_option("--seed", a.seed, "Generator seed (default 1)");
  gen->add_option("--sentences", a.sentences, "Number of sentences")->capture_default_str();
  gen->add_option("--rate", a.rate, "Multi-part token rate")->capture_default_str();
  gen->add_option("--lexicon-dir", a.lexicon_dir, "Lexicon directory")->check(CLI::ExistingDirectory);

  auto* check = app.add_subcommand("check-lexicon", "Validate a lexicon directory");
  check->add_option("--lexicon-dir", a.lexicon_dir, "Lexicon directory")->check(CLI::ExistingDirectory);

  auto* pipelines = app.add_subcommand("pipelines", "List built-in pipeline presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*prepare) return run_prepare(a);
    if (*tokenize) return run_tokenize(a);
    if (*evaluate) return run_evaluate(a);
    if (*compare) return run_compare(a);
    if (*gen) return run_gen_fixture(a);
    if (*check) return run_check_lexicon(a);
    if (*pipelines) return run_pipelines();
  } catch (const ptok::ConfigError& e) {
    std::cerr << "ptok: configuration error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ptok::DivergenceError& e) {
    std::cerr << "ptok: " << e.what() << '\n';
    return kRuntimeError;
  } catch (const std::exception& e) {
    std::cerr << "ptok: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kUsageError;
}

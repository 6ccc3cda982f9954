#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ptok/align.hpp"
#include "ptok/corpus.hpp"
#include "ptok/fixture.hpp"
#include "ptok/lexicon.hpp"
#include "ptok/metrics.hpp"
#include "ptok/pipeline.hpp"

namespace ptok::cli {

inline constexpr const char* kLexiconEnv = "PTOK_LEXICON_DIR";

// --lexicon-dir, else $PTOK_LEXICON_DIR, else empty (built-in lexicon).
std::filesystem::path default_lexicon_dir(const std::optional<std::filesystem::path>& flag);
Lexicon load_lexicon_or_builtin(const std::filesystem::path& dir);

struct PrepareResult {
  std::filesystem::path gold_lines;
  std::filesystem::path input_text;
  CorpusStats stats;
};

// Writes <out_dir>/gold.lines and <out_dir>/input.txt.
PrepareResult cmd_prepare(const std::filesystem::path& dataset, const std::filesystem::path& out_dir,
                          std::size_t token_column = 2);
PrepareResult prepare_corpus(const GoldCorpus& gold, const std::filesystem::path& out_dir);

struct RunManifest {
  PipelineSpec spec;
  std::vector<std::filesystem::path> inputs;
  std::vector<std::filesystem::path> outputs;
  std::optional<std::uint64_t> seed;
  std::string started_at;
  std::string finished_at;
  double total_s = 0;
  StageTimings timings;
  std::size_t tokens = 0;
  std::size_t sentences = 0;
  unsigned threads = 1;

  nlohmann::json to_json() const;
};

struct TokenizeOptions {
  unsigned threads = 1;
  std::optional<std::uint64_t> seed;  // recorded only
  std::optional<std::filesystem::path> manifest_path;  // default: <out>.manifest.json
};

// Resources are loaded (and config errors raised) before anything is
// written.
RunManifest cmd_tokenize(const std::filesystem::path& input, const PipelineSpec& spec,
                         const std::filesystem::path& out, const TokenizeOptions& options = {});

MetricsRow cmd_evaluate(const std::filesystem::path& gold, const std::filesystem::path& sys, AlignMode mode,
                        std::string name = "system", std::optional<std::uint64_t> baseline_errors = {});

// One row per run, errors fixed against `baseline_name`, ascending by
// errors. Throws ConfigError for duplicate names or an unknown baseline.
std::vector<MetricsRow> cmd_compare(const std::filesystem::path& gold,
                                    const std::vector<std::pair<std::string, std::filesystem::path>>& runs,
                                    const std::string& baseline_name, AlignMode mode = AlignMode::strict);

struct FixtureResult {
  std::filesystem::path treebank;
  PrepareResult prepared;
  FixtureTruth truth;
};

// Writes <out_dir>/fixture.conll, gold.lines, input.txt and truth.json.
FixtureResult cmd_gen_fixture(const FixtureOptions& options, const Lexicon& lexicon,
                              const std::filesystem::path& out_dir);

// Tab-separated ID/FORM rows, blank line between sentences.
void write_treebank(const GoldCorpus& corpus, const std::filesystem::path& path);

enum class Format { table, csv, json };
Format parse_format(std::string_view text);
std::string render(const std::vector<MetricsRow>& rows, Format format);

}  // namespace ptok::cli

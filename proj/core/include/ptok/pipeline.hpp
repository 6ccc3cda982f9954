#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptok/clean.hpp"
#include "ptok/lexicon.hpp"
#include "ptok/normalize.hpp"
#include "ptok/space_rules.hpp"
#include "ptok/token_stream.hpp"

namespace ptok {

enum class StageId {
  normalize,
  clean,
  punct_space,
  sentence_split,
  rule_space,
  split,
  multiword,
  verb_join,
  bound_morpheme,
  // Reserved for output of a learned space corrector; tools of that kind
  // are scored from their token-line files instead.
  learned_space,
};
inline constexpr std::size_t kStageCount = 10;

std::string_view to_string(StageId id);
std::optional<StageId> parse_stage_id(std::string_view name);
bool is_text_stage(StageId id);

struct StageSpec {
  StageId id = StageId::split;
  std::map<std::string, std::string> options;

  bool operator==(const StageSpec&) const = default;
};

// Ordered stage list plus shared resources. Text-level stages (normalize,
// clean, punct_space, sentence_split, rule_space) always run before the
// whitespace split and stream-level stages (multiword, verb_join,
// bound_morpheme) after it; within each phase the listed order holds.
//
// Config file format, one `key = value` per line, '#' comments:
//   name = clean+bm+verb
//   lexicon_dir = lexicon          # relative to the config file
//   clean.url = keep               # keep | drop | placeholder:TEXT
//   stage = normalize              # repeated, in order
//   stage = rule_space rules=my_rules.tsv
// Stage options: normalize charmap=PATH, rule_space rules=PATH,
// sentence_split abbreviations=A,B,C.
struct PipelineSpec {
  std::string name;
  std::vector<StageSpec> stages;
  std::filesystem::path lexicon_dir;  // empty: built-in lexicon
  CleanPolicy clean_policy;

  // Throws ConfigError.
  static PipelineSpec parse(std::string_view text, const std::filesystem::path& base_dir = {});
  static PipelineSpec load(const std::filesystem::path& path);
  static PipelineSpec preset(std::string_view name);
  static std::vector<std::string> preset_names();
  // A preset name, else a config file path.
  static PipelineSpec resolve(std::string_view name_or_path);

  std::string serialize() const;

  // Registered ids only, each at most once, known options, valid clean
  // policy, reserved stages rejected. Throws ConfigError.
  void validate() const;

  bool has(StageId id) const;
  const StageSpec* find(StageId id) const;

  bool operator==(const PipelineSpec&) const = default;
};

// Wall-clock seconds per stage. Summing shards is order independent.
class StageTimings {
 public:
  void add(StageId id, double seconds) { seconds_[static_cast<std::size_t>(id)] += seconds; }
  double seconds(StageId id) const { return seconds_[static_cast<std::size_t>(id)]; }
  double total() const;
  StageTimings& operator+=(const StageTimings& other);

 private:
  std::array<double, kStageCount> seconds_{};
};

// A PipelineSpec with its resources loaded and rules compiled.
class Pipeline {
 public:
  // Loads the lexicon (spec.lexicon_dir or the built-in one), charmap and
  // rules. Throws ConfigError / IoError before any text is processed.
  explicit Pipeline(PipelineSpec spec);
  Pipeline(PipelineSpec spec, Lexicon lexicon);

  // Every input line is one sentence (sentence_split may split it further).
  TokenStream run(std::string_view text, StageTimings* timings = nullptr) const;
  TokenStream run_lines(std::span<const std::string> lines, StageTimings* timings = nullptr) const;
  // Shards lines across threads; output identical to run_lines.
  TokenStream run_parallel(std::span<const std::string> lines, unsigned threads,
                           StageTimings* timings = nullptr) const;

  const PipelineSpec& spec() const noexcept { return spec_; }
  const Lexicon& lexicon() const noexcept { return lexicon_; }

 private:
  void init();

  PipelineSpec spec_;
  Lexicon lexicon_;
  CharMap charmap_;
  SpaceRuleSet rules_;
  EntrySet abbreviations_;
};

TokenStream run_pipeline(const PipelineSpec& spec, std::string_view text, StageTimings* timings = nullptr);

std::vector<std::string> split_lines(std::string_view text);

}  // namespace ptok

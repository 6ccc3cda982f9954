#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ptok {

// One regex re-segmentation rule. `pattern` is POSIX extended syntax
// matched leftmost-longest over UTF-8 bytes; `replacement` may contain
// only group references ($1..$9, ${N}, \N) and joiner characters (space,
// underscore, ZWNJ), each group at most once and in increasing order.
struct SpaceRule {
  std::string pattern;
  std::string replacement;
  std::string description;

  bool operator==(const SpaceRule&) const = default;
};

// PATTERN<TAB>REPLACEMENT<TAB>DESCRIPTION per line, '#' comment lines.
// Throws ParseError.
std::vector<SpaceRule> parse_space_rules(std::string_view text, std::string_view origin = "<rules>");
std::vector<SpaceRule> load_space_rules(const std::filesystem::path& path);

// Shipped rules (data/space_rules.tsv).
const std::vector<SpaceRule>& default_space_rules();

// Compiled, validated rule list. Throws ConfigError when a pattern does
// not compile or a replacement could alter letters.
class SpaceRuleSet {
 public:
  SpaceRuleSet();
  explicit SpaceRuleSet(std::vector<SpaceRule> rules);
  ~SpaceRuleSet();
  SpaceRuleSet(SpaceRuleSet&&) noexcept;
  SpaceRuleSet& operator=(SpaceRuleSet&&) noexcept;

  const std::vector<SpaceRule>& rules() const noexcept;
  bool empty() const noexcept;

  // Applies every rule in order. Throws ConfigError if a match's
  // replacement changes the canonical form.
  std::string apply(std::string_view text) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::string rule_space_correction(std::string_view text, const SpaceRuleSet& rules);

}  // namespace ptok

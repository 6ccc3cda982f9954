#include "ptok/space_rules.hpp"

#include <boost/regex.hpp>
#include <fstream>
#include <sstream>

#include "ptok/error.hpp"
#include "ptok/normalize.hpp"
#include "ptok/resources.hpp"
#include "ptok/utf8.hpp"

namespace ptok {
namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

// Throws ConfigError unless the replacement only re-emits groups in order,
// separated by joiners.
void check_replacement(const SpaceRule& rule, std::size_t mark_count) {
  const std::string_view r = rule.replacement;
  int last_group = 0;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ConfigError("space rule '" + rule.pattern + "' -> '" + rule.replacement + "': " + why);
  };
  while (pos < r.size()) {
    const char c = r[pos];
    if (c == '$' || c == '\\') {
      std::size_t p = pos + 1;
      const bool braced = c == '$' && p < r.size() && r[p] == '{';
      if (braced) ++p;
      int group = 0;
      std::size_t digits = 0;
      while (p < r.size() && r[p] >= '0' && r[p] <= '9' && (braced || digits == 0)) {
        group = group * 10 + (r[p] - '0');
        ++p;
        ++digits;
      }
      if (digits == 0) fail("only group references and joiners are allowed");
      if (braced) {
        if (p >= r.size() || r[p] != '}') fail("unterminated ${...}");
        ++p;
      }
      if (group == 0 || static_cast<std::size_t>(group) > mark_count) fail("group $" + std::to_string(group) + " does not exist");
      if (group <= last_group) fail("groups must be referenced once each, in increasing order");
      last_group = group;
      pos = p;
      continue;
    }
    const utf8::Decoded d = utf8::decode_at(r, pos);
    if (!is_joiner(d.cp)) fail("replacement may only add or remove joiners");
    pos += d.size;
  }
}

}  // namespace

std::vector<SpaceRule> parse_space_rules(std::string_view text, std::string_view origin) {
  std::vector<SpaceRule> rules;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (auto bad = utf8::find_invalid(line)) {
      throw EncodingError(std::string(origin), line_no, "invalid UTF-8 at byte " + std::to_string(*bad));
    }
    const auto fields = split_tabs(line);
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty()) {
      throw ParseError(std::string(origin), line_no, "expected PATTERN<TAB>REPLACEMENT<TAB>DESCRIPTION");
    }
    rules.push_back({std::string(fields[0]), std::string(fields[1]), fields.size() > 2 ? std::string(fields[2]) : ""});
  }
  return rules;
}

std::vector<SpaceRule> load_space_rules(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open rules " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space_rules(buf.str(), path.string());
}

const std::vector<SpaceRule>& default_space_rules() {
  static const std::vector<SpaceRule> rules = [] {
    const auto text = resources::find("space_rules.tsv");
    if (!text) throw ConfigError("embedded space_rules.tsv missing");
    return parse_space_rules(*text, "space_rules.tsv");
  }();
  return rules;
}

struct SpaceRuleSet::Impl {
  std::vector<SpaceRule> rules;
  std::vector<boost::regex> compiled;
};

SpaceRuleSet::SpaceRuleSet() : impl_(std::make_unique<Impl>()) {}

SpaceRuleSet::SpaceRuleSet(std::vector<SpaceRule> rules) : impl_(std::make_unique<Impl>()) {
  for (const SpaceRule& rule : rules) {
    boost::regex re;
    try {
      re.assign(rule.pattern, boost::regex::extended);
    } catch (const boost::regex_error& e) {
      throw ConfigError("space rule pattern '" + rule.pattern + "' does not compile: " + e.what());
    }
    check_replacement(rule, re.mark_count());
    impl_->compiled.push_back(std::move(re));
  }
  impl_->rules = std::move(rules);
}

SpaceRuleSet::~SpaceRuleSet() = default;
SpaceRuleSet::SpaceRuleSet(SpaceRuleSet&&) noexcept = default;
SpaceRuleSet& SpaceRuleSet::operator=(SpaceRuleSet&&) noexcept = default;

const std::vector<SpaceRule>& SpaceRuleSet::rules() const noexcept { return impl_->rules; }
bool SpaceRuleSet::empty() const noexcept { return impl_->rules.empty(); }

std::string SpaceRuleSet::apply(std::string_view text) const {
  std::string current(text);
  for (std::size_t i = 0; i < impl_->compiled.size(); ++i) {
    const boost::regex& re = impl_->compiled[i];
    const SpaceRule& rule = impl_->rules[i];
    std::string next;
    next.reserve(current.size());
    auto copied = current.cbegin();
    bool changed = false;
    const auto flags = boost::match_posix | boost::match_not_dot_newline;
    for (boost::sregex_iterator it(current.cbegin(), current.cend(), re, flags), end; it != end; ++it) {
      const boost::smatch& m = *it;
      if (m.length(0) == 0) continue;
      const std::string replaced = m.format(rule.replacement, boost::format_default);
      const std::string original = m.str(0);
      if (replaced == original) continue;
      if (canonical(replaced) != canonical(original)) {
        throw ConfigError("space rule '" + rule.pattern + "' altered letters in '" + original + "'");
      }
      next.append(copied, m[0].first);
      next.append(replaced);
      copied = m[0].second;
      changed = true;
    }
    if (!changed) continue;
    next.append(copied, current.cend());
    current = std::move(next);
  }
  return current;
}

std::string rule_space_correction(std::string_view text, const SpaceRuleSet& rules) { return rules.apply(text); }

}  // namespace ptok

#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ptok {

using EntrySet = std::set<std::string, std::less<>>;
using Multiword = std::vector<std::string>;

// Linguistic resources shared by the tokenizer stages. Entries are
// normalized with the default CharMap on load.
struct Lexicon {
  EntrySet past_stems;
  EntrySet present_stems;
  EntrySet auxiliaries;
  EntrySet verb_prefixes;
  // Person endings and the participle "eh"; may be attached to a stem or
  // stand as the token right after it.
  EntrySet verb_endings;
  EntrySet prefixes;
  EntrySet suffixes;
  // Plain host words; only the fixture generator uses them.
  EntrySet words;
  std::set<Multiword> multiwords;

  bool operator==(const Lexicon&) const = default;
};

// Per-file resource names inside a lexicon directory.
struct LexiconFile {
  std::string_view file;
  EntrySet Lexicon::*set;  // null for multiwords.txt
};
const std::vector<LexiconFile>& lexicon_files();
inline constexpr std::string_view kMultiwordsFile = "multiwords.txt";

struct LexiconReport {
  std::map<std::string, std::size_t> counts;
  std::vector<std::string> duplicates;
  std::vector<std::string> violations;
  std::vector<std::string> ambiguities;

  bool empty() const noexcept { return duplicates.empty() && violations.empty() && ambiguities.empty(); }
};

// Missing files leave their set empty. Throws IoError when `dir` is not a
// directory or a file cannot be read, EncodingError on invalid UTF-8.
// Duplicates dropped while loading are recorded in `report` when given.
Lexicon load_lexicon(const std::filesystem::path& dir, LexiconReport* report = nullptr);

// Same parsing over an arbitrary file provider (returns nullopt for a
// missing file).
using LexiconSource = std::function<std::optional<std::string>(std::string_view file)>;
Lexicon parse_lexicon(const LexiconSource& source, std::string_view origin, LexiconReport* report = nullptr);

// Starter lexicon compiled from data/lexicon.
const Lexicon& builtin_lexicon();

// Writes every resource file; load_lexicon(dir) yields an equal Lexicon.
void save_lexicon(const Lexicon& lex, const std::filesystem::path& dir);

LexiconReport validate_lexicon(const Lexicon& lex);

}  // namespace ptok

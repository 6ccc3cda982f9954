#include "ptok/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "ptok/error.hpp"
#include "ptok/normalize.hpp"
#include "ptok/resources.hpp"
#include "ptok/stages.hpp"
#include "ptok/utf8.hpp"

namespace ptok {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool contains_joiner(std::string_view s) {
  for (std::size_t pos = 0; pos < s.size();) {
    const utf8::Decoded d = utf8::decode_at(s, pos);
    if (is_joiner(d.cp) || utf8::is_space(d.cp)) return true;
    pos += d.size;
  }
  return false;
}

// Calls `fn(line_no, entry)` for every non-comment, non-blank line.
template <class Fn>
void for_each_entry(std::string_view text, const std::string& origin, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (auto bad = utf8::find_invalid(line)) {
      throw EncodingError(origin, line_no, "invalid UTF-8 at byte " + std::to_string(*bad));
    }
    fn(line_no, normalize_chars(line));
  }
}

std::string join(const Multiword& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(' ');
    out.append(parts[i]);
  }
  return out;
}

}  // namespace

const std::vector<LexiconFile>& lexicon_files() {
  static const std::vector<LexiconFile> files = {
      {"past_stems.txt", &Lexicon::past_stems},
      {"present_stems.txt", &Lexicon::present_stems},
      {"auxiliaries.txt", &Lexicon::auxiliaries},
      {"verb_prefixes.txt", &Lexicon::verb_prefixes},
      {"verb_endings.txt", &Lexicon::verb_endings},
      {"prefixes.txt", &Lexicon::prefixes},
      {"suffixes.txt", &Lexicon::suffixes},
      {"words.txt", &Lexicon::words},
      {kMultiwordsFile, nullptr},
  };
  return files;
}

Lexicon parse_lexicon(const LexiconSource& source, std::string_view origin, LexiconReport* report) {
  Lexicon lex;
  for (const LexiconFile& f : lexicon_files()) {
    const std::optional<std::string> text = source(f.file);
    if (!text) continue;
    const std::string where = std::string(origin) + "/" + std::string(f.file);
    for_each_entry(*text, where, [&](std::size_t line_no, std::string entry) {
      bool inserted = false;
      if (f.set) {
        inserted = (lex.*f.set).insert(entry).second;
      } else {
        Multiword parts;
        std::istringstream split(entry);
        for (std::string part; split >> part;) parts.push_back(part);
        inserted = lex.multiwords.insert(std::move(parts)).second;
      }
      if (!inserted && report) {
        report->duplicates.push_back(where + ":" + std::to_string(line_no) + ": " + entry);
      }
    });
  }
  return lex;
}

Lexicon load_lexicon(const std::filesystem::path& dir, LexiconReport* report) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw IoError("lexicon directory not found: " + dir.string());
  return parse_lexicon(
      [&](std::string_view file) -> std::optional<std::string> {
        const auto path = dir / file;
        if (!std::filesystem::exists(path)) return std::nullopt;
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot read " + path.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.bad()) throw IoError("cannot read " + path.string());
        return buf.str();
      },
      dir.string(), report);
}

const Lexicon& builtin_lexicon() {
  static const Lexicon lex = parse_lexicon(
      [](std::string_view file) -> std::optional<std::string> {
        auto text = resources::find("lexicon/" + std::string(file));
        if (!text) return std::nullopt;
        return std::string(*text);
      },
      "<builtin>");
  return lex;
}

void save_lexicon(const Lexicon& lex, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const LexiconFile& f : lexicon_files()) {
    const auto path = dir / f.file;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    if (f.set) {
      for (const auto& entry : lex.*f.set) out << entry << '\n';
    } else {
      for (const auto& parts : lex.multiwords) out << join(parts) << '\n';
    }
    if (!out) throw IoError("write failed: " + path.string());
  }
}

LexiconReport validate_lexicon(const Lexicon& lex) {
  LexiconReport report;
  for (const LexiconFile& f : lexicon_files()) {
    if (!f.set) {
      report.counts[std::string(f.file)] = lex.multiwords.size();
      for (const auto& parts : lex.multiwords) {
        if (parts.size() < 2) {
          report.violations.push_back(std::string(f.file) + ": '" + join(parts) + "' has fewer than 2 parts");
        }
        for (const auto& part : parts) {
          if (part.empty() || contains_joiner(part)) {
            report.violations.push_back(std::string(f.file) + ": '" + join(parts) + "' has an empty or joined part");
            break;
          }
        }
      }
      continue;
    }
    const EntrySet& set = lex.*f.set;
    report.counts[std::string(f.file)] = set.size();
    for (const auto& entry : set) {
      if (entry.empty()) {
        report.violations.push_back(std::string(f.file) + ": empty entry");
      } else if (contains_joiner(entry)) {
        report.violations.push_back(std::string(f.file) + ": '" + entry + "' contains a joiner");
      }
    }
  }
  for (const auto& entry : lex.prefixes) {
    if (lex.suffixes.count(entry)) {
      report.ambiguities.push_back("'" + entry + "' is both a prefix and a suffix (joins as suffix)");
    }
  }
  // Host words that a stage would treat as something else.
  for (const auto& word : lex.words) {
    for (const LexiconFile& f : lexicon_files()) {
      if (f.set && f.set != &Lexicon::words && (lex.*f.set).count(word)) {
        report.ambiguities.push_back("word '" + word + "' also listed in " + std::string(f.file));
      }
    }
    if (is_verb_core(word, lex)) report.ambiguities.push_back("word '" + word + "' parses as a verb stem");
  }
  return report;
}

}  // namespace ptok

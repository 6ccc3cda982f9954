#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ptok {

// Code point substitution table. Applied in a single left-to-right pass;
// construction rejects tables where a target contains a source, so
// applying a map twice is the same as applying it once.
class CharMap {
 public:
  CharMap() = default;

  // Format: one "U+XXXX U+YYYY[,U+ZZZZ...]" entry per line, '#' starts a
  // comment. Throws ParseError (bad line) or ConfigError (closure violation).
  static CharMap parse(std::string_view text, std::string_view origin = "<charmap>");
  static CharMap load(const std::filesystem::path& path);

  // Compiled from data/charmap.txt.
  static const CharMap& default_map();

  void add(char32_t from, std::u32string to);
  const std::u32string* find(char32_t cp) const;

  std::string apply(std::string_view text) const;
  void apply_append(std::string& out, std::string_view text) const;

  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  // Throws ConfigError if any target code point is also a source.
  void check_closure() const;

 private:
  std::unordered_map<char32_t, std::u32string> pairs_;
  // Fast reject for code points below U+10000.
  std::vector<bool> bmp_mapped_ = std::vector<bool>(0x10000, false);
};

std::string normalize_chars(std::string_view text, const CharMap& map = CharMap::default_map());

// Joiner characters erased by canonical(): space, underscore and ZWNJ.
inline bool is_joiner(char32_t cp) noexcept { return cp == U' ' || cp == U'_' || cp == 0x200C; }

// Removes every joiner and applies the default CharMap. Two tokenizations
// of the same text canonicalize identically no matter which joiner each
// used, which is the equivalence scoring is defined over.
std::string canonical(std::string_view s);
void append_canonical(std::string& out, std::string_view s);

}  // namespace ptok

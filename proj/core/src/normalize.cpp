#include "ptok/normalize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ptok/error.hpp"
#include "ptok/resources.hpp"
#include "ptok/utf8.hpp"

namespace ptok {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

char32_t parse_code_point(std::string_view tok, std::string_view origin, std::size_t line) {
  if (tok.size() < 3 || (tok[0] != 'U' && tok[0] != 'u') || tok[1] != '+') {
    throw ParseError(std::string(origin), line, "expected U+XXXX, got '" + std::string(tok) + "'");
  }
  std::uint32_t value = 0;
  const auto* begin = tok.data() + 2;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, value, 16);
  if (ec != std::errc() || ptr != end || value > 0x10FFFF) {
    throw ParseError(std::string(origin), line, "bad code point '" + std::string(tok) + "'");
  }
  return static_cast<char32_t>(value);
}

}  // namespace

CharMap CharMap::parse(std::string_view text, std::string_view origin) {
  CharMap map;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      throw ParseError(std::string(origin), line_no, "expected 'SOURCE TARGET'");
    }
    const char32_t from = parse_code_point(line.substr(0, sep), origin, line_no);
    std::string_view targets = trim(line.substr(sep));
    std::u32string to;
    while (!targets.empty()) {
      const auto comma = targets.find(',');
      to.push_back(parse_code_point(trim(targets.substr(0, comma)), origin, line_no));
      if (comma == std::string_view::npos) break;
      targets.remove_prefix(comma + 1);
    }
    if (to.empty()) throw ParseError(std::string(origin), line_no, "missing target");
    if (map.find(from)) {
      throw ParseError(std::string(origin), line_no, "duplicate source code point");
    }
    map.add(from, std::move(to));
  }
  map.check_closure();
  return map;
}

CharMap CharMap::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open charmap " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

const CharMap& CharMap::default_map() {
  static const CharMap map = [] {
    const auto text = resources::find("charmap.txt");
    if (!text) throw ConfigError("embedded charmap.txt missing");
    return parse(*text, "charmap.txt");
  }();
  return map;
}

void CharMap::add(char32_t from, std::u32string to) {
  if (from < 0x10000) bmp_mapped_[from] = true;
  pairs_[from] = std::move(to);
}

const std::u32string* CharMap::find(char32_t cp) const {
  if (cp < 0x10000 && !bmp_mapped_[cp]) return nullptr;
  auto it = pairs_.find(cp);
  return it == pairs_.end() ? nullptr : &it->second;
}

void CharMap::check_closure() const {
  for (const auto& [from, to] : pairs_) {
    for (char32_t t : to) {
      if (is_joiner(t)) {
        std::ostringstream msg;
        msg << std::hex << std::uppercase << "charmap target of U+" << static_cast<std::uint32_t>(from)
            << " contains a joiner character";
        throw ConfigError(msg.str());
      }
      if (pairs_.count(t)) {
        std::ostringstream msg;
        msg << std::hex << std::uppercase << "charmap not closed: target U+" << static_cast<std::uint32_t>(t)
            << " of U+" << static_cast<std::uint32_t>(from) << " is itself mapped";
        throw ConfigError(msg.str());
      }
    }
  }
}

void CharMap::apply_append(std::string& out, std::string_view text) const {
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto byte = static_cast<unsigned char>(text[pos]);
    if (byte < 0x80 && !bmp_mapped_[byte]) {
      out.push_back(static_cast<char>(byte));
      ++pos;
      continue;
    }
    const utf8::Decoded d = utf8::decode_at(text, pos);
    const std::u32string* repl = d.valid ? find(d.cp) : nullptr;
    if (repl) {
      for (char32_t cp : *repl) utf8::append(out, cp);
    } else {
      out.append(text.substr(pos, d.size));
    }
    pos += d.size;
  }
}

std::string CharMap::apply(std::string_view text) const {
  std::string out;
  out.reserve(text.size());
  apply_append(out, text);
  return out;
}

std::string normalize_chars(std::string_view text, const CharMap& map) { return map.apply(text); }

void append_canonical(std::string& out, std::string_view s) {
  const CharMap& map = CharMap::default_map();
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto byte = static_cast<unsigned char>(s[pos]);
    if (byte == ' ' || byte == '_') {
      ++pos;
      continue;
    }
    if (byte < 0x80 && !map.find(byte)) {
      out.push_back(static_cast<char>(byte));
      ++pos;
      continue;
    }
    const utf8::Decoded d = utf8::decode_at(s, pos);
    if (d.valid && d.cp == utf8::kZwnj) {
      pos += d.size;
      continue;
    }
    const std::u32string* repl = d.valid ? map.find(d.cp) : nullptr;
    if (repl) {
      for (char32_t cp : *repl) utf8::append(out, cp);
    } else {
      out.append(s.substr(pos, d.size));
    }
    pos += d.size;
  }
}

std::string canonical(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  append_canonical(out, s);
  return out;
}

}  // namespace ptok

#include "ptok/segment.hpp"

#include "ptok/clean.hpp"
#include "ptok/utf8.hpp"

namespace ptok {
namespace {

bool is_sentence_mark(char32_t cp) { return cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x061F || cp == 0x06D4; }

// "U.S." style: two or more (letter '.') pairs.
bool is_initialism(std::string_view word) {
  std::size_t pairs = 0;
  std::size_t pos = 0;
  while (pos < word.size()) {
    const utf8::Decoded letter = utf8::decode_at(word, pos);
    if (!is_word_char(letter.cp) || is_digit(letter.cp)) return false;
    pos += letter.size;
    if (pos >= word.size() || word[pos] != '.') return false;
    ++pos;
    ++pairs;
  }
  return pairs >= 2;
}

bool is_digit_separator(std::string_view text, std::size_t pos, const utf8::Decoded& d) {
  if (d.cp != U'.' && d.cp != U',') return false;
  if (pos == 0 || pos + d.size >= text.size()) return false;
  const utf8::Decoded prev = utf8::decode_at(text, utf8::prev_start(text, pos));
  const utf8::Decoded next = utf8::decode_at(text, pos + d.size);
  return is_digit(prev.cp) && is_digit(next.cp);
}

}  // namespace

bool is_punctuation(char32_t cp) noexcept {
  switch (cp) {
    case U'.': case U',': case U';': case U':': case U'!': case U'?':
    case U'(': case U')': case U'[': case U']': case U'{': case U'}':
    case U'"': case U'<': case U'>':
    case 0x00AB: case 0x00BB:  // « »
    case 0x060C: case 0x061B: case 0x061F: case 0x06D4:  // ، ؛ ؟ ۔
    case 0x2026:  // …
      return true;
    default:
      return false;
  }
}

void split_space_into(std::string_view text, TokenStream& out) {
  std::size_t pos = 0;
  std::size_t start = std::string_view::npos;
  while (pos < text.size()) {
    const auto byte = static_cast<unsigned char>(text[pos]);
    std::size_t size = 1;
    bool space;
    if (byte < 0x80) {
      space = byte <= 0x20 || byte == 0x7F;
    } else {
      const utf8::Decoded d = utf8::decode_at(text, pos);
      size = d.size;
      space = utf8::is_space(d.cp);
    }
    if (space) {
      if (start != std::string_view::npos) {
        out.push(std::string(text.substr(start, pos - start)));
        start = std::string_view::npos;
      }
    } else if (start == std::string_view::npos) {
      start = pos;
    }
    pos += size;
  }
  if (start != std::string_view::npos) out.push(std::string(text.substr(start)));
}

TokenStream split_space(std::string_view text) {
  TokenStream out;
  split_space_into(text, out);
  out.end_sentence();
  return out;
}

std::vector<std::string> sentence_split(std::string_view text, const EntrySet& abbreviations) {
  std::vector<std::string> out;
  std::size_t sentence_start = 0;
  std::size_t word_start = 0;
  std::size_t pos = 0;
  auto emit = [&](std::size_t end) {
    std::string_view piece = text.substr(sentence_start, end - sentence_start);
    const auto first = piece.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos) {
      const auto last = piece.find_last_not_of(" \t\r\n");
      out.emplace_back(piece.substr(first, last - first + 1));
    }
    sentence_start = end;
  };
  while (pos < text.size()) {
    const utf8::Decoded d = utf8::decode_at(text, pos);
    if (utf8::is_space(d.cp)) {
      pos += d.size;
      word_start = pos;
      continue;
    }
    if (!is_sentence_mark(d.cp)) {
      pos += d.size;
      continue;
    }
    // Consume the whole run of marks.
    std::size_t end = pos;
    while (end < text.size()) {
      const utf8::Decoded m = utf8::decode_at(text, end);
      if (!is_sentence_mark(m.cp)) break;
      end += m.size;
    }
    const bool at_break = end == text.size() || utf8::is_space(utf8::decode_at(text, end).cp);
    if (at_break) {
      const std::string_view word = text.substr(word_start, end - word_start);
      const bool abbreviation = abbreviations.count(word) > 0 || is_initialism(word);
      if (!abbreviation) emit(end);
    }
    pos = end;
  }
  emit(text.size());
  return out;
}

std::string punctuation_space(std::string_view text) {
  std::string out;
  out.reserve(text.size() + text.size() / 8);
  auto last_is_space = [&] {
    if (out.empty()) return true;
    const utf8::Decoded d = utf8::decode_at(out, utf8::prev_start(out, out.size()));
    return utf8::is_space(d.cp);
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (auto span = span_at(text, pos); span && span->kind != SpanKind::emoji) {
      out.append(text.substr(span->begin, span->end - span->begin));
      pos = span->end;
      continue;
    }
    const utf8::Decoded d = utf8::decode_at(text, pos);
    if (!is_punctuation(d.cp) || is_digit_separator(text, pos, d)) {
      out.append(text.substr(pos, d.size));
      pos += d.size;
      continue;
    }
    if (!last_is_space()) out.push_back(' ');
    out.append(text.substr(pos, d.size));
    pos += d.size;
    if (pos < text.size() && !utf8::is_space(utf8::decode_at(text, pos).cp)) out.push_back(' ');
  }
  return out;
}

}  // namespace ptok

#include "ptok/clean.hpp"

#include <array>

#include "ptok/error.hpp"
#include "ptok/utf8.hpp"

namespace ptok {
namespace {

constexpr std::array kAllKinds = {SpanKind::url, SpanKind::email, SpanKind::hashtag, SpanKind::number,
                                  SpanKind::emoji};

bool is_ascii_alnum(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_url_trailing(char32_t cp) {
  switch (cp) {
    case U'.': case U',': case U';': case U':': case U'!': case U'?':
    case U')': case U']': case U'}': case U'\'': case U'"':
    case 0x00BB: case 0x060C: case 0x061B: case 0x061F:
      return true;
    default:
      return false;
  }
}

bool starts_with_ci(std::string_view text, std::size_t pos, std::string_view prefix) {
  if (text.size() - pos < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    char c = text[pos + i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c != prefix[i]) return false;
  }
  return true;
}

std::size_t match_url(std::string_view text, std::size_t pos) {
  std::size_t scheme = 0;
  for (std::string_view p : {"https://", "http://", "ftp://", "www."}) {
    if (starts_with_ci(text, pos, p)) {
      scheme = p.size();
      break;
    }
  }
  if (scheme == 0) return 0;
  // Extend over non-space characters, remembering the last position that
  // does not end in trailing punctuation.
  std::size_t cur = pos + scheme;
  std::size_t best = 0;
  while (cur < text.size()) {
    const utf8::Decoded d = utf8::decode_at(text, cur);
    if (utf8::is_space(d.cp)) break;
    cur += d.size;
    if (!is_url_trailing(d.cp)) best = cur;
  }
  return best > pos + scheme ? best - pos : 0;
}

bool is_email_local(unsigned char c) {
  return is_ascii_alnum(c) || c == '.' || c == '_' || c == '%' || c == '+' || c == '-';
}

bool is_label_char(unsigned char c) { return is_ascii_alnum(c) || c == '-'; }

std::size_t match_email(std::string_view text, std::size_t pos) {
  std::size_t cur = pos;
  while (cur < text.size() && is_email_local(static_cast<unsigned char>(text[cur]))) ++cur;
  if (cur == pos || cur >= text.size() || text[cur] != '@') return 0;
  ++cur;
  std::size_t labels = 0;
  std::size_t best = 0;
  while (true) {
    const std::size_t start = cur;
    while (cur < text.size() && is_label_char(static_cast<unsigned char>(text[cur]))) ++cur;
    if (cur == start) break;
    ++labels;
    if (labels >= 2) best = cur;
    if (cur < text.size() && text[cur] == '.') {
      ++cur;
    } else {
      break;
    }
  }
  return best ? best - pos : 0;
}

std::size_t match_hashtag(std::string_view text, std::size_t pos) {
  if (text[pos] != '#') return 0;
  std::size_t cur = pos + 1;
  while (cur < text.size()) {
    const utf8::Decoded d = utf8::decode_at(text, cur);
    if (!is_word_char(d.cp)) break;
    cur += d.size;
  }
  return cur > pos + 1 ? cur - pos : 0;
}

bool is_number_separator(char32_t cp) { return cp == U'.' || cp == U',' || cp == 0x066B || cp == 0x066C; }

std::size_t match_number(std::string_view text, std::size_t pos) {
  if (pos > 0) {
    const utf8::Decoded prev = utf8::decode_at(text, utf8::prev_start(text, pos));
    if (is_word_char(prev.cp)) return 0;
  }
  std::size_t cur = pos;
  std::size_t best = 0;
  bool need_digit = true;
  while (cur < text.size()) {
    const utf8::Decoded d = utf8::decode_at(text, cur);
    if (is_digit(d.cp)) {
      cur += d.size;
      best = cur;
      need_digit = false;
    } else if (!need_digit && is_number_separator(d.cp)) {
      cur += d.size;
      need_digit = true;
    } else {
      break;
    }
  }
  return best ? best - pos : 0;
}

bool is_emoji_modifier(char32_t cp) {
  return cp == utf8::kZwj || cp == 0xFE0F || (cp >= 0x1F3FB && cp <= 0x1F3FF);
}

std::size_t match_emoji(std::string_view text, std::size_t pos) {
  const utf8::Decoded first = utf8::decode_at(text, pos);
  if (!is_emoji(first.cp)) return 0;
  std::size_t cur = pos + first.size;
  while (cur < text.size()) {
    const utf8::Decoded d = utf8::decode_at(text, cur);
    if (!is_emoji(d.cp) && !is_emoji_modifier(d.cp)) break;
    cur += d.size;
  }
  return cur - pos;
}

}  // namespace

std::string_view to_string(SpanKind kind) {
  switch (kind) {
    case SpanKind::url: return "url";
    case SpanKind::email: return "email";
    case SpanKind::hashtag: return "hashtag";
    case SpanKind::number: return "number";
    case SpanKind::emoji: return "emoji";
  }
  return "?";
}

SpanAction SpanAction::parse(std::string_view text) {
  if (text == "keep") return keep();
  if (text == "drop") return drop();
  constexpr std::string_view prefix = "placeholder:";
  if (text.starts_with(prefix)) return replace_with(std::string(text.substr(prefix.size())));
  throw ConfigError("bad span action '" + std::string(text) + "' (expected keep, drop or placeholder:TEXT)");
}

std::string SpanAction::str() const {
  switch (kind) {
    case Kind::keep: return "keep";
    case Kind::drop: return "drop";
    case Kind::placeholder: return "placeholder:" + placeholder;
  }
  return {};
}

const SpanAction& CleanPolicy::action(SpanKind kind) const {
  switch (kind) {
    case SpanKind::url: return url;
    case SpanKind::email: return email;
    case SpanKind::hashtag: return hashtag;
    case SpanKind::number: return number;
    case SpanKind::emoji: return emoji;
  }
  return url;
}

SpanAction& CleanPolicy::action(SpanKind kind) {
  return const_cast<SpanAction&>(std::as_const(*this).action(kind));
}

bool CleanPolicy::all_keep() const {
  for (SpanKind k : kAllKinds) {
    if (action(k).kind != SpanAction::Kind::keep) return false;
  }
  return true;
}

void CleanPolicy::validate() const {
  for (SpanKind k : kAllKinds) {
    const SpanAction& a = action(k);
    if (a.kind == SpanAction::Kind::drop && k != SpanKind::emoji) {
      throw ConfigError("only emoji spans may be dropped, not " + std::string(to_string(k)));
    }
    if (a.kind == SpanAction::Kind::placeholder) {
      if (a.placeholder.empty()) throw ConfigError("empty placeholder for " + std::string(to_string(k)));
      for (std::size_t pos = 0; pos < a.placeholder.size();) {
        const utf8::Decoded d = utf8::decode_at(a.placeholder, pos);
        if (utf8::is_space(d.cp)) {
          throw ConfigError("placeholder for " + std::string(to_string(k)) + " contains whitespace");
        }
        pos += d.size;
      }
    }
  }
}

bool is_digit(char32_t cp) noexcept {
  return (cp >= U'0' && cp <= U'9') || (cp >= 0x0660 && cp <= 0x0669) || (cp >= 0x06F0 && cp <= 0x06F9);
}

bool is_emoji(char32_t cp) noexcept {
  return (cp >= 0x1F300 && cp <= 0x1FAFF) || (cp >= 0x2600 && cp <= 0x27BF) || (cp >= 0x1F000 && cp <= 0x1F2FF) ||
         (cp >= 0x2B00 && cp <= 0x2BFF) || cp == 0x00A9 || cp == 0x00AE || cp == 0x203C || cp == 0x2049;
}

bool is_word_char(char32_t cp) noexcept {
  if (cp < 0x80) return is_ascii_alnum(static_cast<unsigned char>(cp)) || cp == U'_';
  if (cp == utf8::kZwnj) return true;
  if (utf8::is_space(cp) || is_emoji(cp) || cp == utf8::kReplacement) return false;
  // Arabic-script punctuation and general punctuation are not word characters.
  switch (cp) {
    case 0x00AB: case 0x00BB: case 0x060C: case 0x061B: case 0x061F: case 0x066A:
    case 0x066B: case 0x066C: case 0x06D4:
      return false;
    default:
      break;
  }
  if (cp >= 0x2010 && cp <= 0x206F) return false;
  if (cp >= 0x3000 && cp <= 0x303F) return false;
  return true;
}

std::size_t match_length(std::string_view text, std::size_t pos, SpanKind kind) {
  if (pos >= text.size()) return 0;
  switch (kind) {
    case SpanKind::url: return match_url(text, pos);
    case SpanKind::email: return match_email(text, pos);
    case SpanKind::hashtag: return match_hashtag(text, pos);
    case SpanKind::number: return match_number(text, pos);
    case SpanKind::emoji: return match_emoji(text, pos);
  }
  return 0;
}

std::optional<Span> span_at(std::string_view text, std::size_t pos) {
  std::optional<Span> best;
  for (SpanKind k : kAllKinds) {
    const std::size_t len = match_length(text, pos, k);
    if (len > 0 && (!best || pos + len > best->end)) best = Span{pos, pos + len, k};
  }
  return best;
}

std::vector<Span> find_spans(std::string_view text) {
  std::vector<Span> spans;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (auto span = span_at(text, pos)) {
      spans.push_back(*span);
      pos = span->end;
    } else {
      pos += utf8::decode_at(text, pos).size;
    }
  }
  return spans;
}

std::string clean_text(std::string_view text, const CleanPolicy& policy) {
  if (policy.all_keep()) return std::string(text);
  std::string out;
  out.reserve(text.size());
  std::size_t copied = 0;
  for (const Span& span : find_spans(text)) {
    const SpanAction& a = policy.action(span.kind);
    if (a.kind == SpanAction::Kind::keep) continue;
    out.append(text.substr(copied, span.begin - copied));
    if (a.kind == SpanAction::Kind::placeholder) out.append(a.placeholder);
    copied = span.end;
  }
  out.append(text.substr(copied));
  return out;
}

}  // namespace ptok

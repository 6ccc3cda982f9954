#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ptok {

enum class SpanKind { url, email, hashtag, number, emoji };

std::string_view to_string(SpanKind kind);

// What clean_text does with a matched span.
struct SpanAction {
  enum class Kind { keep, drop, placeholder };
  Kind kind = Kind::keep;
  std::string placeholder;

  static SpanAction keep() { return {}; }
  static SpanAction drop() { return {Kind::drop, {}}; }
  static SpanAction replace_with(std::string text) { return {Kind::placeholder, std::move(text)}; }

  // "keep", "drop" or "placeholder:TEXT".
  static SpanAction parse(std::string_view text);
  std::string str() const;

  bool operator==(const SpanAction&) const = default;
};

struct CleanPolicy {
  SpanAction url;
  SpanAction email;
  SpanAction hashtag;
  SpanAction number;
  SpanAction emoji;

  const SpanAction& action(SpanKind kind) const;
  SpanAction& action(SpanKind kind);

  bool all_keep() const;

  // Throws ConfigError: placeholders must be non-empty without whitespace,
  // and only emoji may be dropped.
  void validate() const;

  bool operator==(const CleanPolicy&) const = default;
};

struct Span {
  std::size_t begin = 0;  // byte offsets
  std::size_t end = 0;
  SpanKind kind = SpanKind::url;

  bool operator==(const Span&) const = default;
};

// Length in bytes of the longest span of each kind starting at `pos`
// (0 when none). Patterns:
//   url     (http|https|ftp)://  or  www.  followed by non-space characters,
//           minus trailing punctuation . , ; : ! ? ) ] } ' " » ، ؛ ؟
//   email   [A-Za-z0-9._%+-]+ @ label(.label)+   label = [A-Za-z0-9-]+
//   hashtag '#' followed by one or more word characters
//   number  digits (ASCII, Arabic-Indic, Persian) with . , ٫ ٬ separators
//           between digit groups; not preceded by a word character
//   emoji   run of pictographic code points, ZWJ, VS16, skin-tone modifiers
std::size_t match_length(std::string_view text, std::size_t pos, SpanKind kind);

// Leftmost-longest, non-overlapping spans. Ties go to the earlier kind in
// enum order.
std::vector<Span> find_spans(std::string_view text);

// Span starting exactly at `pos`, if any.
std::optional<Span> span_at(std::string_view text, std::size_t pos);

// Replaces matched spans per policy. Unmatched text is copied unchanged;
// kept spans are copied unchanged (they never contain whitespace, and
// punctuation_space skips them).
std::string clean_text(std::string_view text, const CleanPolicy& policy = {});

// Character classes shared by the text stages.
bool is_word_char(char32_t cp) noexcept;
bool is_digit(char32_t cp) noexcept;
bool is_emoji(char32_t cp) noexcept;

}  // namespace ptok

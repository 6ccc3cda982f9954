#include "span_oracle.hpp"

#include <array>
#include <regex>
#include <string>

namespace ptok::test {
namespace {

bool is_word(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

const std::array<std::pair<SpanKind, std::regex>, 4>& patterns() {
  static const std::array<std::pair<SpanKind, std::regex>, 4> p = {{
      {SpanKind::url, std::regex(R"((https?://|ftp://|www\.)\S*[^\s.,;:!?)\]}'"])", std::regex::icase)},
      {SpanKind::email, std::regex(R"([A-Za-z0-9._%+-]+@[A-Za-z0-9-]+(\.[A-Za-z0-9-]+)+)")},
      {SpanKind::hashtag, std::regex(R"(#\w+)")},
      {SpanKind::number, std::regex(R"([0-9]+([.,][0-9]+)*)")},
  }};
  return p;
}

}  // namespace

std::vector<Span> find_spans_bruteforce(std::string_view text) {
  const std::string s(text);
  std::vector<Span> spans;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::optional<Span> best;
    for (const auto& [kind, re] : patterns()) {
      if (kind == SpanKind::number && pos > 0 && is_word(s[pos - 1])) continue;
      for (std::size_t end = s.size(); end > pos; --end) {
        if (std::regex_match(s.begin() + static_cast<std::ptrdiff_t>(pos), s.begin() + static_cast<std::ptrdiff_t>(end),
                             re)) {
          if (!best || end > best->end) best = Span{pos, end, kind};
          break;
        }
      }
    }
    if (best) {
      spans.push_back(*best);
      pos = best->end;
    } else {
      ++pos;
    }
  }
  return spans;
}

}  // namespace ptok::test

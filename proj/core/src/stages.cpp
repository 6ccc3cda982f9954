#include "ptok/stages.hpp"

#include "ptok/utf8.hpp"

namespace ptok {
namespace {

bool has(const EntrySet& set, std::string_view s) { return set.find(s) != set.end(); }

bool is_stem(std::string_view s, const Lexicon& lex) { return has(lex.past_stems, s) || has(lex.present_stems, s); }

bool is_stem_with_ending(std::string_view s, const Lexicon& lex) {
  if (is_stem(s, lex)) return true;
  for (const auto& ending : lex.verb_endings) {
    if (s.size() > ending.size() && s.ends_with(ending) && is_stem(s.substr(0, s.size() - ending.size()), lex)) {
      return true;
    }
  }
  return false;
}

template <class Fn>
TokenStream per_sentence(const TokenStream& stream, Fn&& fn) {
  TokenStream out;
  const std::size_t n = stream.sentence_count();
  for (std::size_t i = 0; i < n; ++i) {
    fn(stream.sentence(i), out);
    out.end_sentence();
  }
  return out;
}

std::string join(std::span<const std::string> parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

// Length of the verb group starting at `i` (0 if none).
std::size_t verb_group_length(std::span<const std::string> s, std::size_t i, const Lexicon& lex) {
  auto tail = [&](std::size_t core) {
    std::size_t j = core + 1;
    if (j < s.size() && has(lex.verb_endings, s[j])) ++j;
    while (j < s.size() && has(lex.auxiliaries, s[j])) ++j;
    return j - i;
  };
  std::size_t best = 0;
  if (is_verb_core(s[i], lex)) best = tail(i);
  if (i + 1 < s.size() && has(lex.verb_prefixes, s[i]) && is_verb_core(s[i + 1], lex)) {
    best = std::max(best, tail(i + 1));
  }
  return best >= 2 ? best : 0;
}

}  // namespace

bool is_verb_core(std::string_view token, const Lexicon& lex) {
  if (is_stem_with_ending(token, lex)) return true;
  for (const auto& prefix : lex.verb_prefixes) {
    if (token.size() <= prefix.size() || !token.starts_with(prefix)) continue;
    std::string_view rest = token.substr(prefix.size());
    if (rest.starts_with(utf8::kZwnjUtf8)) rest.remove_prefix(utf8::kZwnjUtf8.size());
    if (!rest.empty() && is_stem_with_ending(rest, lex)) return true;
  }
  return false;
}

TokenStream multiword_join(const TokenStream& stream, const Lexicon& lex) {
  if (lex.multiwords.empty()) return stream;
  return per_sentence(stream, [&](std::span<const std::string> s, TokenStream& out) {
    std::size_t i = 0;
    while (i < s.size()) {
      std::size_t best = 0;
      // Entries sharing the first token are contiguous in the ordered set.
      for (auto it = lex.multiwords.lower_bound(Multiword{s[i]}); it != lex.multiwords.end(); ++it) {
        const Multiword& entry = *it;
        if (entry.empty() || entry.front() != s[i]) break;
        if (entry.size() < 2 || entry.size() > s.size() - i || entry.size() <= best) continue;
        if (std::equal(entry.begin(), entry.end(), s.begin() + static_cast<std::ptrdiff_t>(i))) best = entry.size();
      }
      if (best) {
        out.push(join(s.subspan(i, best), utf8::kZwnjUtf8));
        i += best;
      } else {
        out.push(s[i]);
        ++i;
      }
    }
  });
}

TokenStream verb_join(const TokenStream& stream, const Lexicon& lex) {
  if (lex.past_stems.empty() && lex.present_stems.empty()) return stream;
  return per_sentence(stream, [&](std::span<const std::string> s, TokenStream& out) {
    std::size_t i = 0;
    while (i < s.size()) {
      const std::size_t len = verb_group_length(s, i, lex);
      if (len) {
        out.push(join(s.subspan(i, len), "_"));
        i += len;
      } else {
        out.push(s[i]);
        ++i;
      }
    }
  });
}

TokenStream bound_morpheme_fix(const TokenStream& stream, const Lexicon& lex) {
  if (lex.prefixes.empty() && lex.suffixes.empty()) return stream;
  return per_sentence(stream, [&](std::span<const std::string> s, TokenStream& out) {
    std::vector<std::string> acc;
    acc.reserve(s.size());
    std::string pending;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string& t = s[i];
      if (!pending.empty()) {
        pending.append(utf8::kZwnjUtf8).append(t);
        acc.push_back(std::move(pending));
        pending.clear();
        continue;
      }
      if (has(lex.suffixes, t) && !acc.empty()) {
        acc.back().append(utf8::kZwnjUtf8).append(t);
        continue;
      }
      if (has(lex.prefixes, t) && i + 1 < s.size()) {
        pending = t;
        continue;
      }
      acc.push_back(t);
    }
    for (auto& t : acc) out.push(std::move(t));
  });
}

}  // namespace ptok

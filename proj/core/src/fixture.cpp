#include "ptok/fixture.hpp"

#include <random>
#include <unordered_set>

#include "ptok/error.hpp"
#include "ptok/utf8.hpp"

namespace ptok {
namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n). Rejection sampling keeps it exact.
  std::size_t below(std::size_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <class Vec>
  const auto& pick(const Vec& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<std::string> to_vector(const EntrySet& set) { return {set.begin(), set.end()}; }

struct Vocab {
  std::vector<std::string> words;
  std::vector<std::string> stems;
  std::vector<std::string> aux;
  std::vector<std::string> verb_prefixes;
  std::vector<std::string> endings;
  std::vector<std::string> prefixes;
  std::vector<std::string> suffixes;
  std::vector<Multiword> multiwords;

  bool can_affix() const { return !prefixes.empty() || !suffixes.empty(); }
  bool can_verb() const { return !stems.empty() && (!aux.empty() || !endings.empty() || !verb_prefixes.empty()); }
  bool can_dictionary() const { return !multiwords.empty(); }
};

enum class Kind { affixed, verb, dictionary };

std::string join_zwnj(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.append(utf8::kZwnjUtf8);
    out.append(parts[i]);
  }
  return out;
}

std::vector<std::string> affixed(Rng& rng, const Vocab& v) {
  std::vector<std::string> parts;
  bool pre = !v.prefixes.empty() && rng.chance(0.5);
  bool suf = !v.suffixes.empty() && rng.chance(0.6);
  if (!pre && !suf) (v.prefixes.empty() ? suf : pre) = true;
  if (pre) parts.push_back(rng.pick(v.prefixes));
  parts.push_back(rng.pick(v.words));
  if (suf) parts.push_back(rng.pick(v.suffixes));
  return parts;
}

std::vector<std::string> verb_group(Rng& rng, const Vocab& v) {
  std::vector<std::string> parts;
  if (!v.verb_prefixes.empty() && rng.chance(0.3)) parts.push_back(rng.pick(v.verb_prefixes));
  std::string stem = rng.pick(v.stems);
  if (!v.endings.empty() && rng.chance(0.25)) stem += rng.pick(v.endings);
  parts.push_back(std::move(stem));
  if (!v.endings.empty() && rng.chance(0.3)) parts.push_back(rng.pick(v.endings));
  if (!v.aux.empty()) {
    const std::size_t n_aux = rng.below(3);
    for (std::size_t i = 0; i < n_aux; ++i) parts.push_back(rng.pick(v.aux));
  }
  if (parts.size() < 2) {
    if (!v.aux.empty()) {
      parts.push_back(rng.pick(v.aux));
    } else if (!v.endings.empty()) {
      parts.push_back(rng.pick(v.endings));
    } else {
      parts.insert(parts.begin(), rng.pick(v.verb_prefixes));
    }
  }
  return parts;
}

}  // namespace

CorpusStats FixtureTruth::stats() const {
  CorpusStats s;
  s.n_sentences = n_sentences;
  s.n_tokens = n_tokens;
  s.avg_sentence_len = n_sentences ? static_cast<double>(n_tokens) / static_cast<double>(n_sentences) : 0.0;
  s.n_distinct_words = n_distinct;
  s.max_token_len = max_token_len;
  s.avg_token_len = n_tokens ? static_cast<double>(total_token_len) / static_cast<double>(n_tokens) : 0.0;
  return s;
}

Fixture gen_fixture(const FixtureOptions& options, const Lexicon& lex) {
  if (!(options.multiword_rate >= 0.0 && options.multiword_rate <= 1.0)) {
    throw ConfigError("multiword_rate must lie in [0, 1]");
  }
  if (options.min_sentence_len == 0 || options.min_sentence_len > options.max_sentence_len) {
    throw ConfigError("bad sentence length range");
  }
  Vocab v;
  v.words = to_vector(lex.words);
  v.stems = to_vector(lex.past_stems);
  for (const auto& s : lex.present_stems) v.stems.push_back(s);
  v.aux = to_vector(lex.auxiliaries);
  v.verb_prefixes = to_vector(lex.verb_prefixes);
  v.endings = to_vector(lex.verb_endings);
  v.prefixes = to_vector(lex.prefixes);
  v.suffixes = to_vector(lex.suffixes);
  v.multiwords.assign(lex.multiwords.begin(), lex.multiwords.end());
  std::erase_if(v.multiwords, [](const Multiword& m) { return m.size() < 2; });

  if (v.words.empty()) throw ConfigError("fixture generation needs a non-empty words list");
  std::vector<Kind> kinds;
  if (v.can_affix()) kinds.push_back(Kind::affixed);
  if (v.can_verb()) kinds.push_back(Kind::verb);
  if (v.can_dictionary()) kinds.push_back(Kind::dictionary);
  if (options.multiword_rate > 0 && (kinds.empty() || (!v.can_affix() && !v.can_verb()))) {
    throw ConfigError("multiword_rate > 0 needs stems (with auxiliaries or endings) or affixes in the lexicon");
  }

  Rng rng(options.seed);
  Fixture fx;
  fx.corpus.source_path = "<fixture seed=" + std::to_string(options.seed) + ">";
  std::unordered_set<std::string> distinct;
  const std::size_t span = options.max_sentence_len - options.min_sentence_len + 1;

  for (std::size_t si = 0; si < options.n_sentences; ++si) {
    GoldSentence sentence;
    sentence.index = si;
    const std::size_t len = options.min_sentence_len + rng.below(span);
    for (std::size_t ti = 0; ti < len; ++ti) {
      std::string token;
      if (rng.chance(options.multiword_rate)) {
        switch (rng.pick(kinds)) {
          case Kind::affixed:
            token = join_zwnj(affixed(rng, v));
            ++fx.truth.n_affixed;
            break;
          case Kind::verb:
            token = join_zwnj(verb_group(rng, v));
            ++fx.truth.n_verb_groups;
            break;
          case Kind::dictionary:
            token = join_zwnj(rng.pick(v.multiwords));
            ++fx.truth.n_dictionary;
            break;
        }
        ++fx.truth.n_multipart;
      } else {
        token = rng.pick(v.words);
      }
      const std::size_t cps = utf8::length(token);
      fx.truth.max_token_len = std::max(fx.truth.max_token_len, cps);
      fx.truth.total_token_len += cps;
      distinct.insert(token);
      sentence.tokens.push_back(std::move(token));
    }
    fx.truth.n_tokens += sentence.tokens.size();
    fx.corpus.sentences.push_back(std::move(sentence));
  }
  fx.truth.n_sentences = fx.corpus.sentences.size();
  fx.truth.n_distinct = distinct.size();
  return fx;
}

}  // namespace ptok

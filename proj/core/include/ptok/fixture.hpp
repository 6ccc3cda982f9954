#pragma once

#include <cstddef>
#include <cstdint>

#include "ptok/corpus.hpp"
#include "ptok/lexicon.hpp"

namespace ptok {

struct FixtureOptions {
  std::uint64_t seed = 1;
  std::size_t n_sentences = 100;
  // Probability that a generated token is multi-part (ZWNJ-joined).
  double multiword_rate = 0.3;
  std::size_t min_sentence_len = 8;
  std::size_t max_sentence_len = 25;
};

// Counts the generator kept while building the corpus.
struct FixtureTruth {
  std::size_t n_sentences = 0;
  std::size_t n_tokens = 0;
  std::size_t n_multipart = 0;
  std::size_t n_affixed = 0;
  std::size_t n_verb_groups = 0;
  std::size_t n_dictionary = 0;
  std::size_t n_distinct = 0;
  std::size_t max_token_len = 0;
  std::size_t total_token_len = 0;

  CorpusStats stats() const;
};

struct Fixture {
  GoldCorpus corpus;
  FixtureTruth truth;
};

// Deterministic for a fixed seed on every platform (no std distributions).
// Multi-part tokens come in three kinds, chosen uniformly among those the
// lexicon can build:
//   affixed      prefix‌word, word‌suffix or prefix‌word‌suffix
//   verb group   [verb_prefix] stem[+ending] [ending] aux*   (>= 2 parts)
//   dictionary   an entry of lex.multiwords
// Single tokens are drawn from lex.words.
// Throws ConfigError when the rate is outside [0,1], words is empty, or
// the rate is positive and neither stems nor affixes are usable.
Fixture gen_fixture(const FixtureOptions& options, const Lexicon& lex);

}  // namespace ptok

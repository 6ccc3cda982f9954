#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ptok/corpus.hpp"

namespace ptok::test {

struct ResegmentOptions {
  double split_rate = 0.2;  // per code point boundary inside a gold token
  double merge_rate = 0.2;  // per gold boundary
};

// A system tokenization of `gold` that spells the same canonical text:
// pieces are cut at random code point boundaries (ZWNJ and "_" joiners
// may end up at piece edges) and neighbours are merged with a random
// joiner. Mixed regions arise when both happen nearby.
std::vector<std::string> resegment(const std::vector<std::string>& gold, std::mt19937_64& rng,
                                   const ResegmentOptions& options = {});

// Random gold token lines over a small alphabet, some with ZWNJ.
std::vector<std::string> random_gold(std::mt19937_64& rng, std::size_t max_tokens);

// Random text mixing Persian letters, Latin, digits, punctuation, spaces
// and joiners.
std::string random_text(std::mt19937_64& rng, std::size_t max_len);

std::vector<std::string> flatten(const GoldCorpus& corpus);

}  // namespace ptok::test

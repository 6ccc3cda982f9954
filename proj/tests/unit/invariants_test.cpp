#include <random>

#include <gtest/gtest.h>

#include "invariants.hpp"
#include "ptok/fixture.hpp"
#include "resegment.hpp"
#include "test_lexicon.hpp"

namespace ptok {
namespace {

std::vector<std::string> fixture_lines(const Lexicon& lex, std::uint64_t seed) {
  FixtureOptions o;
  o.seed = seed;
  o.n_sentences = 40;
  o.multiword_rate = 0.5;
  return corrupt(gen_fixture(o, lex).corpus);
}

TEST(Resegmentation, EveryStagePreservesCanonicalOnFixtures) {
  std::size_t cases = 0;
  for (const Lexicon* lex : {&test::translit_lexicon(), &builtin_lexicon()}) {
    auto lines = fixture_lines(*lex, 17);
    const auto more = fixture_lines(*lex, 18);
    lines.insert(lines.end(), more.begin(), more.end());
    for (StageId id : test::builtin_stages()) {
      const Pipeline p = test::single_stage_pipeline(id, *lex);
      for (const auto& line : lines) {
        EXPECT_TRUE(test::preserves_canonical(p, line)) << to_string(id) << ": " << line;
        ++cases;
      }
    }
  }
  EXPECT_GE(cases, 1000u);
}

TEST(Resegmentation, EveryStagePreservesCanonicalOnRandomText) {
  std::mt19937_64 rng(77);
  for (StageId id : test::builtin_stages()) {
    const Pipeline p = test::single_stage_pipeline(id, builtin_lexicon());
    for (int i = 0; i < 150; ++i) {
      const std::string text = test::random_text(rng, 30);
      EXPECT_TRUE(test::preserves_canonical(p, text)) << to_string(id) << ": " << text;
    }
  }
}

TEST(Resegmentation, PresetsPreserveCanonical) {
  const auto lines = fixture_lines(builtin_lexicon(), 5);
  for (const auto& name : PipelineSpec::preset_names()) {
    const Pipeline p(PipelineSpec::preset(name));
    for (const auto& line : lines) EXPECT_TRUE(test::preserves_canonical(p, line)) << name << ": " << line;
  }
}

TEST(Resegmentation, StagesNeverProduceEmptyTokens) {
  const auto lines = fixture_lines(builtin_lexicon(), 6);
  for (StageId id : test::builtin_stages()) {
    const Pipeline p = test::single_stage_pipeline(id, builtin_lexicon());
    for (const auto& line : lines) {
      const TokenStream out = p.run(line);
      for (const auto& t : out.tokens()) EXPECT_TRUE(is_valid_token(t));
    }
  }
}

}  // namespace
}  // namespace ptok

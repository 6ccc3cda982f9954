#include <random>

#include <gtest/gtest.h>

#include "ptok/fixture.hpp"
#include "ptok/normalize.hpp"
#include "ptok/segment.hpp"
#include "ptok/stages.hpp"
#include "ptok/utf8.hpp"
#include "test_lexicon.hpp"

namespace ptok {
namespace {

using Tokens = std::vector<std::string>;
const std::string kZ(utf8::kZwnjUtf8);

TokenStream one(const Tokens& t) { return TokenStream::from_sentences({t}); }
Tokens tokens(const TokenStream& s) { return {s.tokens().begin(), s.tokens().end()}; }
const Lexicon& lex() { return test::translit_lexicon(); }

TEST(MultiwordJoin, DictionaryEntry) {
  EXPECT_EQ(tokens(multiword_join(one({"goft", "o", "goo"}), lex())), (Tokens{"goft" + kZ + "o" + kZ + "goo"}));
}

TEST(MultiwordJoin, NoHitsIsIdentity) {
  const TokenStream s = one({"ketab", "o", "rooz"});
  EXPECT_EQ(multiword_join(s, lex()), s);
}

TEST(MultiwordJoin, LeftmostThenLongest) {
  Lexicon l;
  l.multiwords = {{"a", "b"}, {"b", "c"}};
  EXPECT_EQ(tokens(multiword_join(one({"a", "b", "c"}), l)), (Tokens{"a" + kZ + "b", "c"}));
  l.multiwords = {{"a", "b"}, {"a", "b", "c"}};
  EXPECT_EQ(tokens(multiword_join(one({"a", "b", "c", "d"}), l)), (Tokens{"a" + kZ + "b" + kZ + "c", "d"}));
}

TEST(MultiwordJoin, NeverCrossesSentences) {
  const TokenStream s = TokenStream::from_sentences({{"goft", "o"}, {"goo"}});
  EXPECT_EQ(multiword_join(s, lex()), s);
}

TEST(VerbJoin, WorkedExample) {
  EXPECT_EQ(tokens(verb_join(one({"khast", "eh", "nemidosheh", "ast"}), lex())),
            (Tokens{"khast_eh_nemidosheh_ast"}));
}

TEST(VerbJoin, StemPlusAuxiliary) {
  EXPECT_EQ(tokens(verb_join(one({"u", "raft", "ast", "."}), lex())), (Tokens{"u", "raft_ast", "."}));
}

TEST(VerbJoin, PrefixAndAttachedForms) {
  EXPECT_EQ(tokens(verb_join(one({"mi", "ravam"}), lex())), (Tokens{"mi_ravam"}));
  EXPECT_EQ(tokens(verb_join(one({"miravad"}), lex())), (Tokens{"miravad"}));  // lone core: no group
  EXPECT_EQ(tokens(verb_join(one({"nemi" + kZ + "rav", "and"}), lex())), (Tokens{"nemi" + kZ + "rav_and"}));
  EXPECT_EQ(tokens(verb_join(one({"goftam", "bood"}), lex())), (Tokens{"goftam_bood"}));
}

TEST(VerbJoin, NoStemsIsIdentity) {
  const TokenStream s = one({"ketab", "ast"});
  EXPECT_EQ(verb_join(s, lex()), s);
  EXPECT_EQ(verb_join(one({"raft", "ast"}), Lexicon{}), one({"raft", "ast"}));
}

TEST(VerbJoin, NeverCrossesSentences) {
  const TokenStream s = TokenStream::from_sentences({{"raft"}, {"ast"}});
  EXPECT_EQ(verb_join(s, lex()), s);
}

TEST(VerbJoin, LeftmostLongest) {
  // "raft ast" could start at "raft" or be preceded by "mi"; the earlier
  // start wins and takes every auxiliary it can.
  EXPECT_EQ(tokens(verb_join(one({"mi", "raft", "ast", "bood", "raft", "eh"}), lex())),
            (Tokens{"mi_raft_ast_bood", "raft_eh"}));
}

TEST(BoundMorpheme, SuffixAndPrefix) {
  EXPECT_EQ(tokens(bound_morpheme_fix(one({"ketab", "ha"}), lex())), (Tokens{"ketab" + kZ + "ha"}));
  EXPECT_EQ(tokens(bound_morpheme_fix(one({"na", "omid"}), lex())), (Tokens{"na" + kZ + "omid"}));
  EXPECT_EQ(tokens(bound_morpheme_fix(one({"bi", "ketab", "ha", "tar"}), lex())),
            (Tokens{"bi" + kZ + "ketab" + kZ + "ha" + kZ + "tar"}));
}

TEST(BoundMorpheme, SentenceEdgesLeftAlone) {
  EXPECT_EQ(tokens(bound_morpheme_fix(one({"ha", "ketab", "na"}), lex())), (Tokens{"ha", "ketab", "na"}));
  const TokenStream s = TokenStream::from_sentences({{"ketab", "na"}, {"ha", "omid"}});
  EXPECT_EQ(bound_morpheme_fix(s, lex()), s);
}

TEST(BoundMorpheme, AmbiguousAffixJoinsAsSuffix) {
  Lexicon l;
  l.prefixes = {"x"};
  l.suffixes = {"x"};
  EXPECT_EQ(tokens(bound_morpheme_fix(one({"a", "x", "b"}), l)), (Tokens{"a" + kZ + "x", "b"}));
  EXPECT_EQ(tokens(bound_morpheme_fix(one({"x", "b"}), l)), (Tokens{"x" + kZ + "b"}));
}

TEST(BoundMorpheme, EmptyAffixesIsIdentity) {
  const TokenStream s = one({"ketab", "ha"});
  EXPECT_EQ(bound_morpheme_fix(s, Lexicon{}), s);
}

TEST(Stages, IdempotentOnFixtures) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    FixtureOptions o;
    o.seed = seed;
    o.n_sentences = 20;
    o.multiword_rate = 0.5;
    for (const Lexicon* l : {&lex(), &builtin_lexicon()}) {
      const auto fx = gen_fixture(o, *l);
      TokenStream input;
      for (const auto& line : corrupt(fx.corpus)) {
        split_space_into(line, input);
        input.end_sentence();
      }
      const TokenStream mw = multiword_join(input, *l);
      EXPECT_EQ(multiword_join(mw, *l), mw);
      const TokenStream bm = bound_morpheme_fix(input, *l);
      EXPECT_EQ(bound_morpheme_fix(bm, *l), bm);
    }
  }
}

TEST(Stages, Deterministic) {
  const TokenStream s = one({"mi", "raft", "ast", "ketab", "ha", "goft", "o", "goo", "na", "omid"});
  EXPECT_EQ(verb_join(s, lex()), verb_join(s, lex()));
  EXPECT_EQ(bound_morpheme_fix(s, lex()), bound_morpheme_fix(s, lex()));
  EXPECT_EQ(multiword_join(s, lex()), multiword_join(s, lex()));
}

}  // namespace
}  // namespace ptok

#include <random>

#include <gtest/gtest.h>

#include "ptok/error.hpp"
#include "ptok/normalize.hpp"
#include "ptok/space_rules.hpp"
#include "ptok/utf8.hpp"
#include "resegment.hpp"

namespace ptok {
namespace {

const std::string kZ(utf8::kZwnjUtf8);

TEST(SpaceRules, JoinsImperfectivePrefix) {
  const SpaceRuleSet rules({{"(^| )(mi) ([^ ]+)", "$1$2" + kZ + "$3", "imperfective"}});
  EXPECT_EQ(rules.apply("mi ravad"), "mi" + kZ + "ravad");
  EXPECT_EQ(rules.apply("u mi ravad x"), "u mi" + kZ + "ravad x");
  EXPECT_EQ(rules.apply("kami ravad"), "kami ravad");
}

TEST(SpaceRules, ShippedRulesJoinPersianMi) {
  const SpaceRuleSet rules(default_space_rules());
  // "می رود" -> "می‌رود"
  EXPECT_EQ(rules.apply("\xD9\x85\xDB\x8C \xD8\xB1\xD9\x88\xD8\xAF"),
            "\xD9\x85\xDB\x8C" + kZ + "\xD8\xB1\xD9\x88\xD8\xAF");
  // "کتاب ها" -> "کتاب‌ها"
  EXPECT_EQ(rules.apply("\xDA\xA9\xD8\xAA\xD8\xA7\xD8\xA8 \xD9\x87\xD8\xA7"),
            "\xDA\xA9\xD8\xAA\xD8\xA7\xD8\xA8" + kZ + "\xD9\x87\xD8\xA7");
  EXPECT_GE(default_space_rules().size(), 3u);
}

TEST(SpaceRules, EmptyListIsIdentity) {
  const SpaceRuleSet none;
  EXPECT_TRUE(none.empty());
  EXPECT_EQ(rule_space_correction("a b  c", none), "a b  c");
}

TEST(SpaceRules, ReplacementsMayOnlyResegment) {
  EXPECT_THROW(SpaceRuleSet({{"(a) (b)", "$2 $1", ""}}), ConfigError);
  EXPECT_THROW(SpaceRuleSet({{"(a) (b)", "$1x$2", ""}}), ConfigError);
  EXPECT_THROW(SpaceRuleSet({{"(a) (b)", "$1$1", ""}}), ConfigError);
  EXPECT_THROW(SpaceRuleSet({{"(a", "$1", ""}}), ConfigError);
  EXPECT_NO_THROW(SpaceRuleSet({{"(a) (b)", "${1}_\\2", ""}}));
}

TEST(SpaceRules, DroppedGroupIsCaughtAtApply) {
  // Dropping group 2 passes the static check but changes letters.
  const SpaceRuleSet rules({{"(a) (b)", "$1", ""}});
  EXPECT_NO_THROW(rules.apply("x y"));
  EXPECT_THROW(rules.apply("a b"), ConfigError);
}

TEST(SpaceRules, LeftmostLongest) {
  const SpaceRuleSet rules({{"(x|x y) (z)", "$1_$2", ""}});
  EXPECT_EQ(rules.apply("x y z"), "x y_z");
}

TEST(SpaceRules, ParseTsv) {
  const auto rules = parse_space_rules("# c\na b\ta_b\tjoin ab\n\n(x) (y)\t$1$2\n");
  ASSERT_EQ(rules.size(), 2u);
  EXPECT_EQ(rules[0].description, "join ab");
  EXPECT_EQ(rules[1].description, "");
  try {
    parse_space_rules("ok\tok\nmissing-tab\n", "r.tsv");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(SpaceRules, ShippedRulesPreserveCanonical) {
  const SpaceRuleSet rules(default_space_rules());
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const std::string t = test::random_text(rng, 20);
    EXPECT_EQ(canonical(rules.apply(t)), canonical(t)) << t;
  }
}

}  // namespace
}  // namespace ptok

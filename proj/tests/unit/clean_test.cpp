#include <gtest/gtest.h>

#include "ptok/clean.hpp"
#include "ptok/error.hpp"
#include "span_oracle.hpp"

namespace ptok {
namespace {

CleanPolicy all_placeholders() {
  CleanPolicy p;
  p.url = SpanAction::replace_with("URL");
  p.email = SpanAction::replace_with("EMAIL");
  p.hashtag = SpanAction::replace_with("TAG");
  p.number = SpanAction::replace_with("NUM");
  p.emoji = SpanAction::drop();
  return p;
}

TEST(Clean, UrlPlaceholder) {
  CleanPolicy p;
  p.url = SpanAction::replace_with("URL");
  EXPECT_EQ(clean_text("see http://x.y now", p), "see URL now");
  EXPECT_EQ(clean_text("(see www.example.com/a?b=1).", p), "(see URL).");
}

TEST(Clean, NoSpansIsIdentity) {
  const std::string s = "\xDA\xA9\xD8\xAA\xD8\xA7\xD8\xA8 plain text, nothing here";
  EXPECT_EQ(clean_text(s, all_placeholders()), s);
}

TEST(Clean, AllKeepIsIdentity) {
  const std::string s = "mail a.b@c.org #tag 3.14 http://x.y \xF0\x9F\x98\x80!";
  EXPECT_EQ(clean_text(s), s);
  EXPECT_TRUE(CleanPolicy{}.all_keep());
}

TEST(Clean, EachKind) {
  EXPECT_EQ(clean_text("a.b@c.org, #tag 1,000.5 x\xF0\x9F\x91\x8D\xF0\x9F\x8F\xBD y", all_placeholders()),
            "EMAIL, TAG NUM x y");
}

TEST(Clean, PersianHashtagAndDigits) {
  EXPECT_EQ(clean_text("#\xDA\xA9\xD8\xAA\xD8\xA7\xD8\xA8 \xDB\xB1\xDB\xB2\xD9\xAB\xDB\xB3", all_placeholders()),
            "TAG NUM");
}

TEST(Clean, NumberNeedsNonWordBefore) {
  EXPECT_EQ(clean_text("abc123 x1", all_placeholders()), "abc123 x1");
  EXPECT_EQ(clean_text("v 12.", all_placeholders()), "v NUM.");
}

TEST(Clean, EmailInsideUrlResolvesToLongest) {
  const auto spans = find_spans("go http://u@host.com/p now");
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].kind, SpanKind::url);
  EXPECT_EQ(spans[0].begin, 3u);
  EXPECT_EQ(spans[0].end, 22u);
}

TEST(Clean, UrlDropsTrailingPunctuation) {
  EXPECT_EQ(match_length("www.a.b).", 0, SpanKind::url), 7u);
  EXPECT_EQ(match_length("http://", 0, SpanKind::url), 0u);
  EXPECT_EQ(match_length("HTTPS://X", 0, SpanKind::url), 9u);
}

TEST(Clean, SpansMatchBruteForceOracle) {
  const std::vector<std::string> cases = {
      "see http://x.y now",
      "http://u@host.com/p",
      "mail me at a.b@c.de.",
      "a@b",
      "a@b.c@d.e",
      "#tag#tag2",
      "x#y #_ #",
      "1,000.50, 3..4 5.",
      "v2 2v 22",
      "www.x.org/a,b) tail",
      "ftp://f.g;h",
      "12@3.45",
      "#12.5",
      "www.",
      "https://a.b/#frag?x=1.",
      "user+tag@mail-server.co.uk)",
      "((www.a.b))",
      "3.14 and 2,5",
      "foo.bar@baz http://q",
      "..@..",
  };
  ASSERT_GE(cases.size(), 20u);
  for (const auto& c : cases) {
    EXPECT_EQ(find_spans(c), test::find_spans_bruteforce(c)) << c;
  }
}

TEST(Clean, EmojiRunsIncludeModifiersAndZwj) {
  const std::string family = "\xF0\x9F\x91\xA8\xE2\x80\x8D\xF0\x9F\x91\xA9\xE2\x80\x8D\xF0\x9F\x91\xA7";
  const auto spans = find_spans("a " + family + " b");
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].kind, SpanKind::emoji);
  EXPECT_EQ(spans[0].end - spans[0].begin, family.size());
}

TEST(CleanPolicy, Validation) {
  CleanPolicy p;
  p.url = SpanAction::drop();
  EXPECT_THROW(p.validate(), ConfigError);
  p = {};
  p.email = SpanAction::replace_with("a b");
  EXPECT_THROW(p.validate(), ConfigError);
  p.email = SpanAction::replace_with("");
  EXPECT_THROW(p.validate(), ConfigError);
  EXPECT_NO_THROW(all_placeholders().validate());
}

TEST(SpanAction, ParseRoundTrip) {
  for (const auto& a : {SpanAction::keep(), SpanAction::drop(), SpanAction::replace_with("X")}) {
    EXPECT_EQ(SpanAction::parse(a.str()), a);
  }
  EXPECT_THROW(SpanAction::parse("wrap"), ConfigError);
}

}  // namespace
}  // namespace ptok

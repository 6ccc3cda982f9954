#include <gtest/gtest.h>

#include "ptok/utf8.hpp"

namespace ptok::utf8 {
namespace {

TEST(Utf8, DecodesEachWidth) {
  EXPECT_EQ(decode("$\xC2\xA2\xE2\x82\xAC\xF0\x90\x8D\x88"), (std::u32string{U'$', 0xA2, 0x20AC, 0x10348}));
}

TEST(Utf8, EncodeRoundTrip) {
  const std::u32string cps = {U'a', 0x06CC, kZwnj, 0x1F600, 0x7FF, 0x800, 0xFFFF, 0x10000};
  EXPECT_EQ(decode(encode(cps)), cps);
  EXPECT_EQ(encode(std::u32string(1, kZwnj)), kZwnjUtf8);
}

TEST(Utf8, RejectsMalformed) {
  EXPECT_FALSE(is_valid("\xC0\xAF"));          // overlong
  EXPECT_FALSE(is_valid("\xED\xA0\x80"));      // surrogate
  EXPECT_FALSE(is_valid("\xE2\x82"));          // truncated
  EXPECT_FALSE(is_valid("\xF4\x90\x80\x80"));  // above U+10FFFF
  EXPECT_FALSE(is_valid("a\x80"));
  EXPECT_EQ(find_invalid("ab\xFF"), 2u);
  EXPECT_TRUE(is_valid("\xD8\xA7\xE2\x80\x8C"));
  EXPECT_THROW(decode("\xFF"), std::invalid_argument);
}

TEST(Utf8, TruncatedSequenceAtEnd) {
  const Decoded d = decode_at("\xE2\x80", 0);
  EXPECT_FALSE(d.valid);
  EXPECT_EQ(d.size, 1u);
  EXPECT_TRUE(decode_at("\xE2\x80\x8C", 0).valid);
}

TEST(Utf8, LengthAndPrevStart) {
  const std::string s = "a\xDB\x8C\xF0\x9F\x98\x80";
  EXPECT_EQ(length(s), 3u);
  EXPECT_EQ(prev_start(s, s.size()), 3u);
  EXPECT_EQ(prev_start(s, 3), 1u);
  EXPECT_EQ(prev_start(s, 1), 0u);
}

TEST(Utf8, Whitespace) {
  EXPECT_TRUE(is_space(U' '));
  EXPECT_TRUE(is_space(0xA0));
  EXPECT_TRUE(is_space(0x2009));
  EXPECT_FALSE(is_space(kZwnj));
  EXPECT_FALSE(is_space(U'_'));
}

}  // namespace
}  // namespace ptok::utf8

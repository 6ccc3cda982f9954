#include <gtest/gtest.h>

#include "ptok/error.hpp"
#include "ptok/lexicon.hpp"
#include "ptok/normalize.hpp"
#include "ptok/utf8.hpp"
#include "temp_dir.hpp"
#include "test_lexicon.hpp"

namespace ptok {
namespace {

bool mentions(const std::vector<std::string>& lines, const std::string& needle) {
  for (const auto& l : lines) {
    if (l.find(needle) != std::string::npos) return true;
  }
  return false;
}

TEST(LoadLexicon, ParsesAndDeduplicates) {
  test::TempDir dir;
  test::write_file(dir / "past_stems.txt", "# stems\nkhast\nraft\n  raft \n\n");
  test::write_file(dir / "multiwords.txt", "goft o goo\ngoft  o goo\n");
  LexiconReport report;
  const Lexicon lex = load_lexicon(dir.path(), &report);
  EXPECT_EQ(lex.past_stems, (EntrySet{"khast", "raft"}));
  EXPECT_EQ(lex.multiwords, (std::set<Multiword>{{"goft", "o", "goo"}}));
  EXPECT_TRUE(lex.present_stems.empty());
  EXPECT_EQ(report.duplicates.size(), 2u);
}

TEST(LoadLexicon, EntriesAreNormalized) {
  test::TempDir dir;
  test::write_file(dir / "words.txt", "\xD8\xB9\xD9\x84\xD9\x8A\n");  // Arabic Yeh
  const Lexicon lex = load_lexicon(dir.path());
  ASSERT_EQ(lex.words.size(), 1u);
  const std::string entry = *lex.words.begin();
  EXPECT_EQ(entry, normalize_chars("\xD8\xB9\xD9\x84\xD9\x8A"));
  EXPECT_EQ(entry, "\xD8\xB9\xD9\x84\xDB\x8C");
}

TEST(LoadLexicon, Errors) {
  EXPECT_THROW(load_lexicon("/nonexistent/lexicon"), IoError);
  test::TempDir dir;
  test::write_file(dir / "suffixes.txt", "ha\n\xC3\n");
  try {
    load_lexicon(dir.path());
    FAIL();
  } catch (const EncodingError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(e.source().find("suffixes.txt"), std::string::npos);
  }
}

TEST(LoadLexicon, SaveLoadRoundTrip) {
  test::TempDir dir;
  save_lexicon(test::translit_lexicon(), dir / "lex");
  EXPECT_EQ(load_lexicon(dir / "lex"), test::translit_lexicon());
  save_lexicon(builtin_lexicon(), dir / "builtin");
  EXPECT_EQ(load_lexicon(dir / "builtin"), builtin_lexicon());
}

TEST(ValidateLexicon, ShippedAndFixtureLexiconsAreClean) {
  const LexiconReport fixture = validate_lexicon(test::translit_lexicon());
  EXPECT_TRUE(fixture.empty()) << (fixture.ambiguities.empty() ? "" : fixture.ambiguities[0]);
  const LexiconReport shipped = validate_lexicon(builtin_lexicon());
  EXPECT_TRUE(shipped.empty()) << (shipped.ambiguities.empty() ? "" : shipped.ambiguities[0]);
  EXPECT_GE(builtin_lexicon().past_stems.size(), 40u);
  EXPECT_GE(builtin_lexicon().present_stems.size(), 40u);
}

TEST(ValidateLexicon, FlagsJoinersAndEmptyEntries) {
  Lexicon lex;
  lex.suffixes = {"a b", "", "c_d", "e" + std::string(utf8::kZwnjUtf8) + "f"};
  lex.multiwords = {{"solo"}};
  const LexiconReport r = validate_lexicon(lex);
  EXPECT_TRUE(mentions(r.violations, "'a b'"));
  EXPECT_TRUE(mentions(r.violations, "empty entry"));
  EXPECT_TRUE(mentions(r.violations, "'c_d'"));
  EXPECT_TRUE(mentions(r.violations, "fewer than 2"));
  EXPECT_EQ(r.violations.size(), 5u);
}

TEST(ValidateLexicon, FlagsPrefixSuffixAmbiguity) {
  Lexicon lex;
  lex.prefixes = {"na"};
  lex.suffixes = {"na"};
  const LexiconReport r = validate_lexicon(lex);
  EXPECT_TRUE(r.violations.empty());
  ASSERT_EQ(r.ambiguities.size(), 1u);
  EXPECT_FALSE(r.empty());
}

TEST(ValidateLexicon, FlagsHostWordsThatStagesWouldCapture) {
  Lexicon lex = test::translit_lexicon();
  lex.words.insert("ha");
  lex.words.insert("raftam");
  const LexiconReport r = validate_lexicon(lex);
  EXPECT_TRUE(mentions(r.ambiguities, "'ha'"));
  EXPECT_TRUE(mentions(r.ambiguities, "'raftam' parses as a verb stem"));
}

TEST(ValidateLexicon, CountsPerFile) {
  const LexiconReport r = validate_lexicon(test::translit_lexicon());
  EXPECT_EQ(r.counts.at("past_stems.txt"), 7u);
  EXPECT_EQ(r.counts.at("multiwords.txt"), 3u);
}

}  // namespace
}  // namespace ptok

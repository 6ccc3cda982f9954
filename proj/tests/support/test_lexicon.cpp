#include "test_lexicon.hpp"

namespace ptok::test {

const Lexicon& translit_lexicon() {
  static const Lexicon lex = [] {
    Lexicon l;
    l.past_stems = {"khast", "raft", "goft", "kard", "did", "amad", "bast"};
    l.present_stems = {"rav", "gu", "kon", "bin", "nevis"};
    l.auxiliaries = {"ast", "bood", "shodeh", "nemidosheh", "khahad", "bashad"};
    l.verb_prefixes = {"mi", "nemi"};
    l.verb_endings = {"eh", "am", "id", "and"};
    l.prefixes = {"na", "ba", "bi"};
    l.suffixes = {"ha", "haye", "tar", "tarin"};
    l.words = {"ketab", "rooz", "omid", "khaneh", "daftar", "dust", "shahr", "dars", "kuh", "sib",
               "gol", "derakht", "panjereh", "madar", "pedar", "darya", "asman", "qalam", "mah", "sal"};
    l.multiwords = {{"goft", "o", "goo"}, {"kam", "o", "bish"}, {"dad", "o", "setad"}};
    return l;
  }();
  return lex;
}

}  // namespace ptok::test

#pragma once

#include <string>
#include <string_view>

#include "ptok/lexicon.hpp"
#include "ptok/token_stream.hpp"

namespace ptok {

// Joins runs of tokens listed in lex.multiwords into one ZWNJ-joined
// token. Greedy: at each position the longest entry wins, scanning left
// to right; matches never cross a sentence boundary.
TokenStream multiword_join(const TokenStream& stream, const Lexicon& lex);

// Joins verb groups with "_". A verb group is the longest run of
//   [verb prefix] core [ending] auxiliary*
// with at least two tokens, where `core` is a past or present stem,
// optionally with an attached ending and/or an attached verb prefix
// (directly or through ZWNJ). Leftmost match first; never crosses a
// sentence boundary.
TokenStream verb_join(const TokenStream& stream, const Lexicon& lex);

// Attaches bare affix tokens with ZWNJ in one left-to-right pass: a suffix
// joins the previous token, a prefix joins the next one. A token that is
// both is tried as a suffix first. A suffix opening a sentence and a
// prefix closing one are left alone.
TokenStream bound_morpheme_fix(const TokenStream& stream, const Lexicon& lex);

// True when `token` can serve as the core of a verb group.
bool is_verb_core(std::string_view token, const Lexicon& lex);

}  // namespace ptok

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ptok/lexicon.hpp"
#include "ptok/token_stream.hpp"

namespace ptok {

// Splits on runs of whitespace; the result is a single sentence.
TokenStream split_space(std::string_view text);

// Appends the whitespace-separated pieces of `text` to `out` without
// closing the sentence.
void split_space_into(std::string_view text, TokenStream& out);

// Sentence boundaries are runs of . ! ? ؟ (and the Arabic full stop U+06D4)
// followed by whitespace or end of text; the marks stay with the preceding
// sentence. A word ending in the mark is not a boundary when it is an
// abbreviation: listed in `abbreviations` (compared with its final period)
// or made of two or more single-letter-plus-period pairs ("U.S.").
std::vector<std::string> sentence_split(std::string_view text, const EntrySet& abbreviations = {});

// Isolates punctuation with spaces so split_space yields it as separate
// tokens. Separators between digits (3.14, 1,000) are left alone, as are
// URL, email, hashtag and number spans. Only inserts spaces.
std::string punctuation_space(std::string_view text);

bool is_punctuation(char32_t cp) noexcept;

}  // namespace ptok

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptok/token_stream.hpp"

namespace ptok {

struct GoldSentence {
  std::vector<std::string> tokens;
  std::size_t index = 0;

  bool operator==(const GoldSentence&) const = default;
};

struct GoldCorpus {
  std::vector<GoldSentence> sentences;
  std::string source_path;

  std::size_t token_count() const noexcept;
  bool empty() const noexcept { return sentences.empty(); }
  TokenStream to_stream() const;
  static GoldCorpus from_stream(const TokenStream& stream, std::string source = {});
};

struct CorpusStats {
  std::size_t n_sentences = 0;
  double avg_sentence_len = 0;
  std::size_t n_tokens = 0;
  std::size_t n_distinct_words = 0;
  std::size_t max_token_len = 0;  // code points
  double avg_token_len = 0;

  bool operator==(const CorpusStats&) const = default;
};

// Tab-separated dependency treebank (CoNLL style): blank lines end
// sentences, lines starting with '#' are comments. `token_column` is
// 1-based. Spaces inside a token cell become a single ZWNJ so every gold
// token stays a single line downstream.
// Throws ParseError (short line, empty cell, bad UTF-8), EmptyCorpusError.
GoldCorpus read_dependency_file(const std::filesystem::path& path, std::size_t token_column = 2);
GoldCorpus read_dependency(std::istream& in, std::string source, std::size_t token_column = 2);

// One input line per sentence: tokens joined by single spaces with every
// ZWNJ turned into a space.
std::vector<std::string> corrupt(const GoldCorpus& gold);
std::string corrupt_sentence(std::span<const std::string> tokens);

// One token per line, blank line between sentences, LF endings, trailing
// newline. Throws IoError.
void emit_token_lines(const GoldCorpus& corpus, const std::filesystem::path& path);
void emit_token_lines(const TokenStream& stream, const std::filesystem::path& path);
void write_token_lines(const TokenStream& stream, std::ostream& out);

// Inverse of emit_token_lines.
GoldCorpus read_token_lines(const std::filesystem::path& path);
GoldCorpus read_token_lines(std::istream& in, std::string source);

// Throws EmptyCorpusError.
CorpusStats corpus_stats(const GoldCorpus& gold);

// Lines in the order used by the `prepare` report.
std::string format_stats(const CorpusStats& stats);

}  // namespace ptok

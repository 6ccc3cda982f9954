#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ptok {

// Ordered tokens of a document plus the sentence structure over them.
// Tokens are never empty and never contain whitespace. Sentences are
// non-empty; `sentence_ends()` holds the exclusive end offset of each one,
// strictly increasing, the last equal to size().
class TokenStream {
 public:
  TokenStream() = default;

  static TokenStream from_sentences(const std::vector<std::vector<std::string>>& sentences);

  // Appends to the open sentence. Throws std::invalid_argument if the
  // token is empty or contains whitespace.
  void push(std::string token);
  // Closes the open sentence; no-op when it is empty.
  void end_sentence();
  void append(const TokenStream& other);

  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }
  std::span<const std::string> tokens() const noexcept { return tokens_; }
  const std::string& operator[](std::size_t i) const { return tokens_[i]; }

  // Closed sentences plus the open one, if non-empty.
  std::size_t sentence_count() const noexcept;
  std::span<const std::string> sentence(std::size_t i) const;
  std::vector<std::size_t> sentence_ends() const;

  std::vector<std::vector<std::string>> sentences() const;

  bool operator==(const TokenStream&) const = default;

 private:
  std::vector<std::string> tokens_;
  std::vector<std::size_t> ends_;
};

bool is_valid_token(std::string_view token) noexcept;

}  // namespace ptok

#include "ptok/token_stream.hpp"

#include <stdexcept>

#include "ptok/utf8.hpp"

namespace ptok {

bool is_valid_token(std::string_view token) noexcept {
  if (token.empty()) return false;
  for (std::size_t pos = 0; pos < token.size();) {
    const auto byte = static_cast<unsigned char>(token[pos]);
    if (byte < 0x80) {
      if (byte <= 0x20 || byte == 0x7F) return false;
      ++pos;
      continue;
    }
    const utf8::Decoded d = utf8::decode_at(token, pos);
    if (utf8::is_space(d.cp)) return false;
    pos += d.size;
  }
  return true;
}

TokenStream TokenStream::from_sentences(const std::vector<std::vector<std::string>>& sentences) {
  TokenStream out;
  for (const auto& sentence : sentences) {
    for (const auto& token : sentence) out.push(token);
    out.end_sentence();
  }
  return out;
}

void TokenStream::push(std::string token) {
  if (!is_valid_token(token)) {
    throw std::invalid_argument("invalid token '" + token + "': empty or contains whitespace");
  }
  tokens_.push_back(std::move(token));
}

void TokenStream::end_sentence() {
  const std::size_t last = ends_.empty() ? 0 : ends_.back();
  if (tokens_.size() > last) ends_.push_back(tokens_.size());
}

void TokenStream::append(const TokenStream& other) {
  end_sentence();
  const std::size_t offset = tokens_.size();
  tokens_.insert(tokens_.end(), other.tokens_.begin(), other.tokens_.end());
  for (std::size_t end : other.ends_) ends_.push_back(offset + end);
}

std::size_t TokenStream::sentence_count() const noexcept {
  const std::size_t last = ends_.empty() ? 0 : ends_.back();
  return ends_.size() + (tokens_.size() > last ? 1 : 0);
}

std::span<const std::string> TokenStream::sentence(std::size_t i) const {
  if (i >= sentence_count()) throw std::out_of_range("sentence index out of range");
  const std::size_t begin = i == 0 ? 0 : ends_[i - 1];
  const std::size_t end = i < ends_.size() ? ends_[i] : tokens_.size();
  return std::span<const std::string>(tokens_).subspan(begin, end - begin);
}

std::vector<std::size_t> TokenStream::sentence_ends() const {
  std::vector<std::size_t> ends = ends_;
  const std::size_t last = ends.empty() ? 0 : ends.back();
  if (tokens_.size() > last) ends.push_back(tokens_.size());
  return ends;
}

std::vector<std::vector<std::string>> TokenStream::sentences() const {
  std::vector<std::vector<std::string>> out;
  const std::size_t n = sentence_count();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto s = sentence(i);
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

}  // namespace ptok

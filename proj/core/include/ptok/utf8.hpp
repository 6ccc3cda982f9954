#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ptok::utf8 {

inline constexpr char32_t kZwnj = 0x200C;
inline constexpr char32_t kZwj = 0x200D;
inline constexpr char32_t kReplacement = 0xFFFD;
inline constexpr std::string_view kZwnjUtf8 = "\xE2\x80\x8C";

struct Decoded {
  char32_t cp = 0;
  std::size_t size = 0;  // bytes consumed; 0 only at end of input
  bool valid = true;
};

// Decodes the code point starting at `pos`. Invalid sequences consume one
// byte and report `valid == false` with cp = U+FFFD.
Decoded decode_at(std::string_view s, std::size_t pos) noexcept;

// Byte offset of the first invalid sequence, if any.
std::optional<std::size_t> find_invalid(std::string_view s) noexcept;
inline bool is_valid(std::string_view s) noexcept { return !find_invalid(s); }

void append(std::string& out, char32_t cp);
std::string encode(std::u32string_view cps);

// Throws std::invalid_argument on malformed input.
std::u32string decode(std::string_view s);

// Number of code points. Invalid bytes count as one each.
std::size_t length(std::string_view s) noexcept;

// Byte offset of the code point that ends right before `pos`.
std::size_t prev_start(std::string_view s, std::size_t pos) noexcept;

// Unicode White_Space plus ASCII controls treated as separators.
bool is_space(char32_t cp) noexcept;

}  // namespace ptok::utf8

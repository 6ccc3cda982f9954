#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "ptok/error.hpp"

namespace ptok {

enum class AlignMode { strict, lenient };

std::string_view to_string(AlignMode mode);
AlignMode parse_align_mode(std::string_view text);  // throws ConfigError

struct AlignmentCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t errors = 0;
  std::uint64_t gold_tokens = 0;
  std::uint64_t sys_tokens = 0;
  std::uint64_t tn = 0;  // always 0: tokenization has no true-negative unit

  AlignmentCounts& operator+=(const AlignmentCounts& other);
  bool operator==(const AlignmentCounts&) const = default;
};

// Raised in strict mode when the two streams stop spelling the same
// characters. Line numbers are physical (1-based) lines in each input;
// 0 means that stream was exhausted.
class DivergenceError : public Error {
 public:
  DivergenceError(std::size_t gold_line, std::size_t sys_line, std::string gold_text, std::string sys_text);

  std::size_t gold_line() const noexcept { return gold_line_; }
  std::size_t sys_line() const noexcept { return sys_line_; }
  const std::string& gold_text() const noexcept { return gold_text_; }
  const std::string& sys_text() const noexcept { return sys_text_; }

 private:
  std::size_t gold_line_;
  std::size_t sys_line_;
  std::string gold_text_;
  std::string sys_text_;
};

class LineReader {
 public:
  virtual ~LineReader() = default;
  // Next physical line without its terminator; false at end of input.
  virtual bool next(std::string& line) = 0;
  // Physical number of the line last returned.
  virtual std::size_t line_number() const noexcept = 0;
};

class SpanLineReader final : public LineReader {
 public:
  explicit SpanLineReader(std::span<const std::string> lines) : lines_(lines) {}
  bool next(std::string& line) override;
  std::size_t line_number() const noexcept override { return pos_; }

 private:
  std::span<const std::string> lines_;
  std::size_t pos_ = 0;
};

class StreamLineReader final : public LineReader {
 public:
  explicit StreamLineReader(std::istream& in) : in_(in) {}
  bool next(std::string& line) override;
  std::size_t line_number() const noexcept override { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

// One closed alignment region, reported in stream order.
struct Region {
  enum class Kind { match, mismatch, divergent, trailing };
  Kind kind = Kind::match;
  std::size_t gold_first_line = 0;
  std::size_t sys_first_line = 0;
  std::size_t gold_lines = 0;
  std::size_t sys_lines = 0;
};
using RegionObserver = std::function<void(const Region&)>;

struct AlignStats {
  std::size_t regions = 0;
  // Largest number of bytes the aligner held between lines. Bounded by the
  // longest line, independent of stream length.
  std::size_t peak_pending_bytes = 0;
};

// Two-cursor greedy alignment. Blank lines, and lines with no characters
// left after canonical(), are skipped on both sides. Equal lines score a
// true positive. Otherwise one error is charged for the region and the
// side whose accumulated text is a proper prefix of the other's is
// extended: each extra system line is a false positive (over-split), each
// extra gold line a false negative (under-split). The region closes when
// both sides spell the same text. When neither side is a prefix of the
// other, strict mode throws DivergenceError; lenient mode drops the region
// with one false positive and one false negative and resynchronizes.
AlignmentCounts align(LineReader& gold, LineReader& sys, AlignMode mode = AlignMode::strict,
                      AlignStats* stats = nullptr, const RegionObserver& observer = {});
AlignmentCounts align(std::span<const std::string> gold, std::span<const std::string> sys,
                      AlignMode mode = AlignMode::strict);
// Streams both files; memory does not grow with file length.
AlignmentCounts align_files(const std::filesystem::path& gold, const std::filesystem::path& sys,
                            AlignMode mode = AlignMode::strict, AlignStats* stats = nullptr);

// Reference implementation over token boundary sets: gold and system
// boundaries are offsets into the shared canonical string, regions are the
// intervals between consecutive shared boundaries. Quadratic; meant for
// tests. Throws DivergenceError when the character streams differ.
AlignmentCounts align_oracle(std::span<const std::string> gold, std::span<const std::string> sys);

}  // namespace ptok

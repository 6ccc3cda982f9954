#include "ptok/align.hpp"

#include <istream>
#include <vector>

#include "ptok/normalize.hpp"

namespace ptok {
namespace {

// Yields canonical forms of the lines that take part in alignment.
class CanonicalCursor {
 public:
  explicit CanonicalCursor(LineReader& reader) : reader_(reader) {}

  bool next() {
    while (reader_.next(raw_)) {
      text_.clear();
      append_canonical(text_, raw_);
      if (!text_.empty()) {
        ++count_;
        return true;
      }
    }
    return false;
  }

  const std::string& text() const noexcept { return text_; }
  const std::string& raw() const noexcept { return raw_; }
  std::size_t line() const noexcept { return reader_.line_number(); }
  std::uint64_t count() const noexcept { return count_; }

 private:
  LineReader& reader_;
  std::string raw_;
  std::string text_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::string_view to_string(AlignMode mode) { return mode == AlignMode::strict ? "strict" : "lenient"; }

AlignMode parse_align_mode(std::string_view text) {
  if (text == "strict") return AlignMode::strict;
  if (text == "lenient") return AlignMode::lenient;
  throw ConfigError("unknown align mode '" + std::string(text) + "' (expected strict or lenient)");
}

AlignmentCounts& AlignmentCounts::operator+=(const AlignmentCounts& o) {
  tp += o.tp;
  fp += o.fp;
  fn += o.fn;
  errors += o.errors;
  gold_tokens += o.gold_tokens;
  sys_tokens += o.sys_tokens;
  tn += o.tn;
  return *this;
}

DivergenceError::DivergenceError(std::size_t gold_line, std::size_t sys_line, std::string gold_text,
                                 std::string sys_text)
    : Error("streams diverge at gold line " + (gold_line ? std::to_string(gold_line) : std::string("<end>")) +
            " ('" + gold_text + "') and system line " +
            (sys_line ? std::to_string(sys_line) : std::string("<end>")) + " ('" + sys_text +
            "'): the tokenizer changed characters, not just boundaries"),
      gold_line_(gold_line),
      sys_line_(sys_line),
      gold_text_(std::move(gold_text)),
      sys_text_(std::move(sys_text)) {}

bool SpanLineReader::next(std::string& line) {
  if (pos_ >= lines_.size()) return false;
  line = lines_[pos_++];
  return true;
}

bool StreamLineReader::next(std::string& line) {
  if (!std::getline(in_, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  ++line_;
  return true;
}

AlignmentCounts align(LineReader& gold_reader, LineReader& sys_reader, AlignMode mode, AlignStats* stats,
                      const RegionObserver& observer) {
  CanonicalCursor gold(gold_reader);
  CanonicalCursor sys(sys_reader);
  AlignmentCounts c;
  AlignStats local;
  const bool strict = mode == AlignMode::strict;

  auto emit = [&](Region::Kind kind, std::size_t g_line, std::size_t s_line, std::size_t g_n, std::size_t s_n) {
    ++local.regions;
    if (observer) observer({kind, g_line, s_line, g_n, s_n});
  };
  auto diverge = [&](bool gold_ok, bool sys_ok) {
    throw DivergenceError(gold_ok ? gold.line() : 0, sys_ok ? sys.line() : 0, gold_ok ? gold.raw() : "",
                          sys_ok ? sys.raw() : "");
  };

  // Unmatched text of the side that is ahead inside an open region.
  std::string rest;
  while (true) {
    const bool have_gold = gold.next();
    const bool have_sys = sys.next();
    if (!have_gold && !have_sys) break;
    if (!have_gold || !have_sys) {
      if (strict) diverge(have_gold, have_sys);
      // Lenient: every leftover line is unmatched.
      const std::size_t g_first = have_gold ? gold.line() : 0;
      const std::size_t s_first = have_sys ? sys.line() : 0;
      std::uint64_t n = 1;
      CanonicalCursor& left = have_gold ? gold : sys;
      while (left.next()) ++n;
      (have_gold ? c.fn : c.fp) += n;
      ++c.errors;
      emit(Region::Kind::trailing, g_first, s_first, have_gold ? n : 0, have_sys ? n : 0);
      break;
    }

    const std::string& g = gold.text();
    const std::string& s = sys.text();
    if (g == s) {
      ++c.tp;
      emit(Region::Kind::match, gold.line(), sys.line(), 1, 1);
      continue;
    }

    ++c.errors;
    const std::size_t g_first = gold.line();
    const std::size_t s_first = sys.line();
    std::size_t g_n = 1;
    std::size_t s_n = 1;
    bool sys_ahead;
    if (s.size() > g.size() && s.starts_with(g)) {
      sys_ahead = true;
      rest.assign(s, g.size());
    } else if (g.size() > s.size() && g.starts_with(s)) {
      sys_ahead = false;
      rest.assign(g, s.size());
    } else {
      if (strict) diverge(true, true);
      ++c.fp;
      ++c.fn;
      emit(Region::Kind::divergent, g_first, s_first, 1, 1);
      continue;
    }

    bool diverged = false;
    while (true) {
      local.peak_pending_bytes = std::max(local.peak_pending_bytes, rest.size());
      // The side behind reads its next line.
      CanonicalCursor& behind = sys_ahead ? gold : sys;
      if (!behind.next()) {
        if (strict) diverge(!sys_ahead, sys_ahead);
        diverged = true;
        break;
      }
      if (sys_ahead) {
        ++c.fn;
        ++g_n;
      } else {
        ++c.fp;
        ++s_n;
      }
      const std::string& piece = behind.text();
      if (piece == rest) break;
      if (rest.size() > piece.size() && rest.starts_with(piece)) {
        rest.erase(0, piece.size());
      } else if (piece.size() > rest.size() && piece.starts_with(rest)) {
        rest.assign(piece, rest.size());
        sys_ahead = !sys_ahead;
      } else {
        if (strict) diverge(true, true);
        diverged = true;
        break;
      }
    }
    if (diverged) {
      ++c.fp;
      ++c.fn;
      emit(Region::Kind::divergent, g_first, s_first, g_n, s_n);
      continue;
    }
    emit(Region::Kind::mismatch, g_first, s_first, g_n, s_n);
  }

  c.gold_tokens = gold.count();
  c.sys_tokens = sys.count();
  if (stats) *stats = local;
  return c;
}

AlignmentCounts align(std::span<const std::string> gold, std::span<const std::string> sys, AlignMode mode) {
  SpanLineReader g(gold);
  SpanLineReader s(sys);
  return align(g, s, mode);
}

AlignmentCounts align_files(const std::filesystem::path& gold, const std::filesystem::path& sys, AlignMode mode,
                            AlignStats* stats) {
  std::ifstream gin(gold, std::ios::binary);
  if (!gin) throw IoError("cannot open " + gold.string());
  std::ifstream sin(sys, std::ios::binary);
  if (!sin) throw IoError("cannot open " + sys.string());
  StreamLineReader g(gin);
  StreamLineReader s(sin);
  AlignmentCounts counts = align(g, s, mode, stats);
  if (gin.bad() || sin.bad()) throw IoError("read failed while aligning");
  return counts;
}

AlignmentCounts align_oracle(std::span<const std::string> gold, std::span<const std::string> sys) {
  auto boundaries = [](std::span<const std::string> lines, std::string& text, std::vector<std::size_t>& cuts) {
    cuts.push_back(0);
    for (const auto& line : lines) {
      const std::string piece = canonical(line);
      if (piece.empty()) continue;
      text += piece;
      cuts.push_back(text.size());
    }
  };
  std::string gold_text, sys_text;
  std::vector<std::size_t> gold_cuts, sys_cuts;
  boundaries(gold, gold_text, gold_cuts);
  boundaries(sys, sys_text, sys_cuts);
  if (gold_text != sys_text) {
    std::size_t at = 0;
    while (at < gold_text.size() && at < sys_text.size() && gold_text[at] == sys_text[at]) ++at;
    throw DivergenceError(0, 0, gold_text.substr(at, 16), sys_text.substr(at, 16));
  }

  AlignmentCounts c;
  c.gold_tokens = gold_cuts.size() - 1;
  c.sys_tokens = sys_cuts.size() - 1;

  std::vector<std::size_t> shared;
  for (std::size_t g : gold_cuts) {
    for (std::size_t s : sys_cuts) {
      if (g == s) {
        shared.push_back(g);
        break;
      }
    }
  }
  auto pieces_in = [](const std::vector<std::size_t>& cuts, std::size_t lo, std::size_t hi) {
    std::uint64_t n = 0;
    for (std::size_t x : cuts) {
      if (x >= lo && x < hi) ++n;
    }
    return n;
  };
  for (std::size_t i = 0; i + 1 < shared.size(); ++i) {
    const std::uint64_t ng = pieces_in(gold_cuts, shared[i], shared[i + 1]);
    const std::uint64_t ns = pieces_in(sys_cuts, shared[i], shared[i + 1]);
    if (ng == 1 && ns == 1) {
      ++c.tp;
    } else {
      ++c.errors;
      c.fn += ng - 1;
      c.fp += ns - 1;
    }
  }
  return c;
}

}  // namespace ptok

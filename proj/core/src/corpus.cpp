#include "ptok/corpus.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_set>

#include "ptok/error.hpp"
#include "ptok/utf8.hpp"

namespace ptok {
namespace {

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool is_blank(std::string_view line) { return line.find_first_not_of(" \t") == std::string_view::npos; }

// Trims the cell and folds each internal run of spaces into one ZWNJ.
std::string normalize_cell(std::string_view cell) {
  const auto first = cell.find_first_not_of(' ');
  if (first == std::string_view::npos) return {};
  const auto last = cell.find_last_not_of(' ');
  cell = cell.substr(first, last - first + 1);
  std::string out;
  out.reserve(cell.size());
  bool in_gap = false;
  for (char c : cell) {
    if (c == ' ') {
      in_gap = true;
      continue;
    }
    if (in_gap) {
      out.append(utf8::kZwnjUtf8);
      in_gap = false;
    }
    out.push_back(c);
  }
  return out;
}

std::string_view nth_field(std::string_view line, std::size_t column, std::size_t& n_fields) {
  std::size_t field = 1;
  std::size_t start = 0;
  std::string_view found;
  bool have = false;
  while (true) {
    const auto tab = line.find('\t', start);
    const auto piece = line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start);
    if (field == column) {
      found = piece;
      have = true;
    }
    if (tab == std::string_view::npos) break;
    start = tab + 1;
    ++field;
  }
  n_fields = field;
  return have ? found : std::string_view{};
}

void ensure_utf8(std::string_view line, const std::string& source, std::size_t line_no) {
  if (auto bad = utf8::find_invalid(line)) {
    throw EncodingError(source, line_no, "invalid UTF-8 at byte " + std::to_string(*bad));
  }
}

}  // namespace

std::size_t GoldCorpus::token_count() const noexcept {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

TokenStream GoldCorpus::to_stream() const {
  TokenStream stream;
  for (const auto& s : sentences) {
    for (const auto& t : s.tokens) stream.push(t);
    stream.end_sentence();
  }
  return stream;
}

GoldCorpus GoldCorpus::from_stream(const TokenStream& stream, std::string source) {
  GoldCorpus corpus;
  corpus.source_path = std::move(source);
  const std::size_t n = stream.sentence_count();
  for (std::size_t i = 0; i < n; ++i) {
    auto s = stream.sentence(i);
    corpus.sentences.push_back({{s.begin(), s.end()}, i});
  }
  return corpus;
}

GoldCorpus read_dependency(std::istream& in, std::string source, std::size_t token_column) {
  if (token_column == 0) throw ConfigError("token column is 1-based");
  GoldCorpus corpus;
  corpus.source_path = source;
  GoldSentence current;
  std::string line;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (current.tokens.empty()) return;
    current.index = corpus.sentences.size();
    corpus.sentences.push_back(std::move(current));
    current = {};
  };
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (is_blank(line)) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;
    ensure_utf8(line, source, line_no);
    std::size_t n_fields = 0;
    const std::string_view cell = nth_field(line, token_column, n_fields);
    if (n_fields < token_column) {
      throw ParseError(source, line_no,
                       "expected at least " + std::to_string(token_column) + " tab-separated columns, found " +
                           std::to_string(n_fields));
    }
    std::string token = normalize_cell(cell);
    if (!is_valid_token(token)) throw ParseError(source, line_no, "empty or malformed token cell");
    current.tokens.push_back(std::move(token));
  }
  if (in.bad()) throw IoError("read failed: " + source);
  flush();
  if (corpus.sentences.empty()) throw EmptyCorpusError("no sentences in " + source);
  return corpus;
}

GoldCorpus read_dependency_file(const std::filesystem::path& path, std::size_t token_column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_dependency(in, path.string(), token_column);
}

std::string corrupt_sentence(std::span<const std::string> tokens) {
  std::string joined;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) joined.push_back(' ');
    joined.append(tokens[i]);
  }
  std::string out;
  out.reserve(joined.size());
  for (std::size_t pos = 0; pos < joined.size();) {
    if (joined.compare(pos, utf8::kZwnjUtf8.size(), utf8::kZwnjUtf8) == 0) {
      out.push_back(' ');
      pos += utf8::kZwnjUtf8.size();
    } else {
      out.push_back(joined[pos++]);
    }
  }
  return out;
}

std::vector<std::string> corrupt(const GoldCorpus& gold) {
  std::vector<std::string> out;
  out.reserve(gold.sentences.size());
  for (const auto& s : gold.sentences) out.push_back(corrupt_sentence(s.tokens));
  return out;
}

void write_token_lines(const TokenStream& stream, std::ostream& out) {
  const std::size_t n = stream.sentence_count();
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out << '\n';
    for (const auto& token : stream.sentence(i)) out << token << '\n';
  }
}

void emit_token_lines(const TokenStream& stream, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  write_token_lines(stream, out);
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

void emit_token_lines(const GoldCorpus& corpus, const std::filesystem::path& path) {
  emit_token_lines(corpus.to_stream(), path);
}

GoldCorpus read_token_lines(std::istream& in, std::string source) {
  GoldCorpus corpus;
  corpus.source_path = source;
  GoldSentence current;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) {
      if (!current.tokens.empty()) {
        current.index = corpus.sentences.size();
        corpus.sentences.push_back(std::move(current));
        current = {};
      }
      continue;
    }
    ensure_utf8(line, source, line_no);
    current.tokens.push_back(line);
  }
  if (!current.tokens.empty()) {
    current.index = corpus.sentences.size();
    corpus.sentences.push_back(std::move(current));
  }
  return corpus;
}

GoldCorpus read_token_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_token_lines(in, path.string());
}

CorpusStats corpus_stats(const GoldCorpus& gold) {
  if (gold.empty()) throw EmptyCorpusError("corpus has no sentences");
  CorpusStats stats;
  std::unordered_set<std::string_view> distinct;
  std::size_t total_len = 0;
  for (const auto& s : gold.sentences) {
    for (const auto& t : s.tokens) {
      const std::size_t len = utf8::length(t);
      total_len += len;
      stats.max_token_len = std::max(stats.max_token_len, len);
      distinct.insert(t);
      ++stats.n_tokens;
    }
  }
  stats.n_sentences = gold.sentences.size();
  stats.n_distinct_words = distinct.size();
  stats.avg_sentence_len = static_cast<double>(stats.n_tokens) / static_cast<double>(stats.n_sentences);
  stats.avg_token_len = stats.n_tokens ? static_cast<double>(total_len) / static_cast<double>(stats.n_tokens) : 0.0;
  return stats;
}

std::string format_stats(const CorpusStats& stats) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "Number of Sentences       " << stats.n_sentences << '\n'
      << "Average Sentence Length   " << stats.avg_sentence_len << '\n'
      << "Number of Distinct Words  " << stats.n_distinct_words << '\n'
      << "Number of Tokens          " << stats.n_tokens << '\n'
      << "Max Token Length          " << stats.max_token_len << '\n'
      << "Average Token Length      " << stats.avg_token_len << '\n';
  return out.str();
}

}  // namespace ptok

#include "ptok/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "ptok/error.hpp"
#include "ptok/resources.hpp"
#include "ptok/segment.hpp"
#include "ptok/stages.hpp"

namespace ptok {
namespace {

constexpr std::array<std::pair<StageId, std::string_view>, kStageCount> kStageNames = {{
    {StageId::normalize, "normalize"},
    {StageId::clean, "clean"},
    {StageId::punct_space, "punct_space"},
    {StageId::sentence_split, "sentence_split"},
    {StageId::rule_space, "rule_space"},
    {StageId::split, "split"},
    {StageId::multiword, "multiword"},
    {StageId::verb_join, "verb_join"},
    {StageId::bound_morpheme, "bound_morpheme"},
    {StageId::learned_space, "learned_space"},
}};

constexpr std::array<std::string_view, 10> kPresets = {
    "baseline", "bm", "verb", "verb+bm", "clean", "clean+bm", "clean+verb", "clean+bm+verb", "rules", "full",
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::set<std::string_view> allowed_options(StageId id) {
  switch (id) {
    case StageId::normalize: return {"charmap"};
    case StageId::rule_space: return {"rules"};
    case StageId::sentence_split: return {"abbreviations"};
    default: return {};
  }
}

std::filesystem::path resolve_path(const std::filesystem::path& base, std::string_view value) {
  std::filesystem::path p{std::string(value)};
  if (p.is_relative() && !base.empty()) p = base / p;
  return p;
}

class ScopedTimer {
 public:
  ScopedTimer(StageTimings* timings, StageId id) : timings_(timings), id_(id) {
    if (timings_) start_ = std::chrono::steady_clock::now();
  }
  ~ScopedTimer() {
    if (timings_) {
      timings_->add(id_, std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count());
    }
  }
  ScopedTimer(const ScopedTimer&) = delete;
  ScopedTimer& operator=(const ScopedTimer&) = delete;

 private:
  StageTimings* timings_;
  StageId id_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::string_view to_string(StageId id) {
  for (const auto& [sid, name] : kStageNames) {
    if (sid == id) return name;
  }
  return "?";
}

std::optional<StageId> parse_stage_id(std::string_view name) {
  for (const auto& [sid, n] : kStageNames) {
    if (n == name) return sid;
  }
  return std::nullopt;
}

bool is_text_stage(StageId id) {
  switch (id) {
    case StageId::normalize:
    case StageId::clean:
    case StageId::punct_space:
    case StageId::sentence_split:
    case StageId::rule_space:
      return true;
    default:
      return false;
  }
}

PipelineSpec PipelineSpec::parse(std::string_view text, const std::filesystem::path& base_dir) {
  PipelineSpec spec;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ConfigError("pipeline config line " + std::to_string(line_no) + ": " + why);
  };
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected key = value");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "name") {
      spec.name = value;
    } else if (key == "lexicon_dir") {
      spec.lexicon_dir = value.empty() ? std::filesystem::path{} : resolve_path(base_dir, value);
    } else if (key.starts_with("clean.")) {
      const std::string_view kind = key.substr(6);
      SpanAction action = SpanAction::parse(value);
      if (kind == "url") spec.clean_policy.url = action;
      else if (kind == "email") spec.clean_policy.email = action;
      else if (kind == "hashtag") spec.clean_policy.hashtag = action;
      else if (kind == "number") spec.clean_policy.number = action;
      else if (kind == "emoji") spec.clean_policy.emoji = action;
      else fail("unknown clean category '" + std::string(kind) + "'");
    } else if (key == "stage") {
      std::istringstream words{std::string(value)};
      std::string id_text;
      words >> id_text;
      const auto id = parse_stage_id(id_text);
      if (!id) fail("unknown stage '" + id_text + "'");
      StageSpec stage{*id, {}};
      for (std::string opt; words >> opt;) {
        const auto oeq = opt.find('=');
        if (oeq == std::string::npos || oeq == 0) fail("stage option must be key=value: '" + opt + "'");
        std::string okey = opt.substr(0, oeq);
        std::string oval = opt.substr(oeq + 1);
        if (okey == "rules" || okey == "charmap") oval = resolve_path(base_dir, oval).string();
        stage.options[okey] = oval;
      }
      spec.stages.push_back(std::move(stage));
    } else {
      fail("unknown key '" + std::string(key) + "'");
    }
  }
  spec.validate();
  return spec;
}

PipelineSpec PipelineSpec::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open pipeline config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  PipelineSpec spec = parse(buf.str(), path.parent_path());
  if (spec.name.empty()) spec.name = path.stem().string();
  return spec;
}

PipelineSpec PipelineSpec::preset(std::string_view name) {
  const auto text = resources::find("pipelines/" + std::string(name) + ".conf");
  if (!text) throw ConfigError("unknown pipeline preset '" + std::string(name) + "'");
  PipelineSpec spec = parse(*text);
  if (spec.name.empty()) spec.name = name;
  return spec;
}

std::vector<std::string> PipelineSpec::preset_names() { return {kPresets.begin(), kPresets.end()}; }

PipelineSpec PipelineSpec::resolve(std::string_view name_or_path) {
  for (std::string_view p : kPresets) {
    if (p == name_or_path) return preset(p);
  }
  return load(std::filesystem::path{std::string(name_or_path)});
}

std::string PipelineSpec::serialize() const {
  std::ostringstream out;
  if (!name.empty()) out << "name = " << name << '\n';
  if (!lexicon_dir.empty()) out << "lexicon_dir = " << lexicon_dir.string() << '\n';
  for (SpanKind k : {SpanKind::url, SpanKind::email, SpanKind::hashtag, SpanKind::number, SpanKind::emoji}) {
    const SpanAction& a = clean_policy.action(k);
    if (a.kind != SpanAction::Kind::keep) out << "clean." << to_string(k) << " = " << a.str() << '\n';
  }
  for (const StageSpec& s : stages) {
    out << "stage = " << to_string(s.id);
    for (const auto& [k, v] : s.options) out << ' ' << k << '=' << v;
    out << '\n';
  }
  return out.str();
}

void PipelineSpec::validate() const {
  std::set<StageId> seen;
  for (const StageSpec& s : stages) {
    if (!seen.insert(s.id).second) throw ConfigError("stage '" + std::string(to_string(s.id)) + "' listed twice");
    if (s.id == StageId::learned_space) {
      throw ConfigError(
          "stage 'learned_space' is reserved: run the learned corrector externally and score its "
          "token-line output with `ptok evaluate`");
    }
    const auto allowed = allowed_options(s.id);
    for (const auto& [k, v] : s.options) {
      if (!allowed.count(k)) {
        throw ConfigError("stage '" + std::string(to_string(s.id)) + "' has no option '" + k + "'");
      }
      if (v.empty()) throw ConfigError("empty value for option '" + k + "'");
    }
  }
  clean_policy.validate();
}

bool PipelineSpec::has(StageId id) const { return find(id) != nullptr; }

const StageSpec* PipelineSpec::find(StageId id) const {
  for (const StageSpec& s : stages) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

double StageTimings::total() const {
  double sum = 0;
  for (double s : seconds_) sum += s;
  return sum;
}

StageTimings& StageTimings::operator+=(const StageTimings& other) {
  for (std::size_t i = 0; i < kStageCount; ++i) seconds_[i] += other.seconds_[i];
  return *this;
}

Pipeline::Pipeline(PipelineSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  lexicon_ = spec_.lexicon_dir.empty() ? builtin_lexicon() : load_lexicon(spec_.lexicon_dir);
  init();
}

Pipeline::Pipeline(PipelineSpec spec, Lexicon lexicon) : spec_(std::move(spec)), lexicon_(std::move(lexicon)) {
  spec_.validate();
  init();
}

void Pipeline::init() {
  if (const StageSpec* s = spec_.find(StageId::normalize)) {
    auto it = s->options.find("charmap");
    charmap_ = it == s->options.end() ? CharMap::default_map() : CharMap::load(it->second);
  }
  if (const StageSpec* s = spec_.find(StageId::rule_space)) {
    auto it = s->options.find("rules");
    rules_ = SpaceRuleSet(it == s->options.end() ? default_space_rules() : load_space_rules(it->second));
  }
  if (const StageSpec* s = spec_.find(StageId::sentence_split)) {
    if (auto it = s->options.find("abbreviations"); it != s->options.end()) {
      std::istringstream list(it->second);
      for (std::string a; std::getline(list, a, ',');) {
        if (!a.empty()) abbreviations_.insert(a);
      }
    }
  }
}

TokenStream Pipeline::run_lines(std::span<const std::string> lines, StageTimings* timings) const {
  std::vector<std::string> pieces;
  pieces.reserve(lines.size());
  for (const auto& line : lines) pieces.push_back(line);

  for (const StageSpec& stage : spec_.stages) {
    if (!is_text_stage(stage.id)) continue;
    ScopedTimer timer(timings, stage.id);
    if (stage.id == StageId::sentence_split) {
      std::vector<std::string> split;
      split.reserve(pieces.size());
      for (const auto& p : pieces) {
        for (auto& s : sentence_split(p, abbreviations_)) split.push_back(std::move(s));
      }
      pieces = std::move(split);
      continue;
    }
    for (auto& p : pieces) {
      switch (stage.id) {
        case StageId::normalize: p = charmap_.apply(p); break;
        case StageId::clean: p = clean_text(p, spec_.clean_policy); break;
        case StageId::punct_space: p = punctuation_space(p); break;
        case StageId::rule_space: p = rules_.apply(p); break;
        default: break;
      }
    }
  }

  TokenStream stream;
  {
    ScopedTimer timer(timings, StageId::split);
    for (const auto& p : pieces) {
      split_space_into(p, stream);
      stream.end_sentence();
    }
  }

  for (const StageSpec& stage : spec_.stages) {
    if (is_text_stage(stage.id) || stage.id == StageId::split) continue;
    ScopedTimer timer(timings, stage.id);
    switch (stage.id) {
      case StageId::multiword: stream = multiword_join(stream, lexicon_); break;
      case StageId::verb_join: stream = verb_join(stream, lexicon_); break;
      case StageId::bound_morpheme: stream = bound_morpheme_fix(stream, lexicon_); break;
      default: break;
    }
  }
  return stream;
}

TokenStream Pipeline::run(std::string_view text, StageTimings* timings) const {
  const std::vector<std::string> lines = split_lines(text);
  return run_lines(lines, timings);
}

TokenStream Pipeline::run_parallel(std::span<const std::string> lines, unsigned threads,
                                   StageTimings* timings) const {
  if (threads <= 1 || lines.size() < 2 * threads) return run_lines(lines, timings);
  const std::size_t shard = (lines.size() + threads - 1) / threads;
  std::vector<TokenStream> outputs(threads);
  std::vector<StageTimings> shard_timings(threads);
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(lines.size(), t * shard);
      const std::size_t end = std::min(lines.size(), begin + shard);
      workers.emplace_back([&, t, begin, end] {
        try {
          outputs[t] = run_lines(lines.subspan(begin, end - begin), &shard_timings[t]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  TokenStream merged;
  for (unsigned t = 0; t < threads; ++t) {
    merged.append(outputs[t]);
    if (timings) *timings += shard_timings[t];
  }
  return merged;
}

TokenStream run_pipeline(const PipelineSpec& spec, std::string_view text, StageTimings* timings) {
  return Pipeline(spec).run(text, timings);
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    pos = eol + 1;
  }
  return lines;
}

}  // namespace ptok

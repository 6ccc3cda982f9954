#include "invariants.hpp"

#include "ptok/normalize.hpp"
#include "ptok/utf8.hpp"

namespace ptok::test {

std::vector<StageId> builtin_stages() {
  std::vector<StageId> ids;
  for (std::size_t i = 0; i < kStageCount; ++i) {
    const auto id = static_cast<StageId>(i);
    if (id != StageId::learned_space) ids.push_back(id);
  }
  return ids;
}

Pipeline single_stage_pipeline(StageId id, const Lexicon& lex) {
  PipelineSpec spec;
  spec.name = std::string(to_string(id));
  spec.stages.push_back({id, {}});
  if (id != StageId::split) spec.stages.push_back({StageId::split, {}});
  return Pipeline(spec, lex);
}

std::string strip_separators(std::string_view text) {
  std::string out;
  for (std::size_t pos = 0; pos < text.size();) {
    const utf8::Decoded d = utf8::decode_at(text, pos);
    if (!(d.cp <= 0x20 || d.cp == 0x7F || utf8::is_space(d.cp))) out.append(text.substr(pos, d.size));
    pos += d.size;
  }
  return out;
}

bool preserves_canonical(const Pipeline& pipeline, const std::string& text) {
  std::string joined;
  const TokenStream out = pipeline.run(text);
  for (const auto& t : out.tokens()) joined += t;
  return canonical(joined) == canonical(strip_separators(text));
}

}  // namespace ptok::test

#include <benchmark/benchmark.h>

#include <filesystem>

#include "ptok/align.hpp"
#include "ptok/corpus.hpp"
#include "ptok/fixture.hpp"
#include "ptok/pipeline.hpp"

namespace {

using namespace ptok;

void align_streams(benchmark::State& state) {
  FixtureOptions o;
  o.seed = 4;
  o.n_sentences = static_cast<std::size_t>(state.range(0));
  const GoldCorpus gold = gen_fixture(o, builtin_lexicon()).corpus;
  const TokenStream sys = Pipeline(PipelineSpec::preset("baseline")).run_lines(corrupt(gold));

  const auto dir = std::filesystem::temp_directory_path() / "ptok_bench_align";
  std::filesystem::create_directories(dir);
  emit_token_lines(gold, dir / "gold.lines");
  emit_token_lines(sys, dir / "sys.lines");
  for (auto _ : state) {
    benchmark::DoNotOptimize(align_files(dir / "gold.lines", dir / "sys.lines"));
  }
  state.counters["tokens/s"] = benchmark::Counter(static_cast<double>(gold.token_count()) * state.iterations(),
                                                  benchmark::Counter::kIsRate);
  std::filesystem::remove_all(dir);
}

}  // namespace

BENCHMARK(align_streams)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

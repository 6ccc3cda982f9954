#include <benchmark/benchmark.h>

#include "ptok/corpus.hpp"
#include "ptok/fixture.hpp"
#include "ptok/pipeline.hpp"

namespace {

using namespace ptok;

const std::vector<std::string>& input_lines() {
  static const std::vector<std::string> lines = [] {
    FixtureOptions o;
    o.seed = 3;
    o.n_sentences = 5000;
    return corrupt(gen_fixture(o, builtin_lexicon()).corpus);
  }();
  return lines;
}

void run_preset(benchmark::State& state, const char* name) {
  const Pipeline p(PipelineSpec::preset(name));
  const auto& lines = input_lines();
  std::size_t tokens = 0;
  for (auto _ : state) {
    const TokenStream out = p.run_lines(lines);
    tokens = out.size();
    benchmark::DoNotOptimize(tokens);
  }
  state.counters["tokens/s"] =
      benchmark::Counter(static_cast<double>(tokens) * state.iterations(), benchmark::Counter::kIsRate);
}

void run_parallel(benchmark::State& state) {
  const Pipeline p(PipelineSpec::preset("full"));
  const auto& lines = input_lines();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(p.run_parallel(lines, threads).size());
}

}  // namespace

BENCHMARK_CAPTURE(run_preset, baseline, "baseline")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run_preset, full, "full")->Unit(benchmark::kMillisecond);
BENCHMARK(run_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

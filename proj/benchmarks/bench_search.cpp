#include <benchmark/benchmark.h>

#include "griesmer/bounds.hpp"
#include "griesmer/search.hpp"
#include "griesmer/theorems.hpp"

using namespace griesmer;

namespace {

const WitnessSet& five_word_set() {
  static const WitnessSet ws = WitnessSet::from_strings(2, {"000", "001", "010", "011", "101"});
  return ws;
}

void set_nodes(benchmark::State& state, std::uint64_t nodes) {
  state.counters["nodes"] = static_cast<double>(nodes);
  state.counters["nodes_per_s"] =
      benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kIsIterationInvariantRate);
}

}  // namespace

// Binary d = 5, 6 refutation at m = d + 1; arg 1 toggles symmetry breaking.
static void BM_FiveWordRefutation(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SearchOptions opts;
  opts.symmetry = state.range(1) != 0;
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    auto out = tail_search(five_word_set(), d + 1, d, opts);
    nodes = out.nodes_explored;
    benchmark::DoNotOptimize(out);
  }
  set_nodes(state, nodes);
}
BENCHMARK(BM_FiveWordRefutation)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMicrosecond);

static void BM_FullSearch(benchmark::State& state) {
  const CodeParams p{2, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                     static_cast<int>(state.range(2))};
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    auto out = full_search(p);
    nodes = out.nodes_explored;
    benchmark::DoNotOptimize(out);
  }
  set_nodes(state, nodes);
}
BENCHMARK(BM_FullSearch)
    ->Args({7, 4, 3})
    ->Args({10, 5, 4})
    ->Args({13, 6, 5})
    ->Unit(benchmark::kMillisecond);

static void BM_NaiveOracle(benchmark::State& state) {
  const auto ws = WitnessSet::from_strings(2, {"000", "001", "010", "011"});
  for (auto _ : state) benchmark::DoNotOptimize(naive_oracle(ws, static_cast<int>(state.range(0)), 5));
}
BENCHMARK(BM_NaiveOracle)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_VerifyAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VerifyAll)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_GriesmerSum(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(griesmer_sum(2, k, 1'000'000));
}
BENCHMARK(BM_GriesmerSum)->Arg(16)->Arg(1'000'000);

BENCHMARK_MAIN();

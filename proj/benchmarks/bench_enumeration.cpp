#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "lcsenum/branch_finder.hpp"
#include "lcsenum/enumerator.hpp"
#include "lcsenum/first_lcs.hpp"
#include "lcsenum/match_view.hpp"

namespace {

std::string make(std::mt19937_64& rng, std::size_t n, std::size_t alphabet) {
  std::string s(n, 'a');
  for (auto& c : s) c = static_cast<char>('a' + rng() % alphabet);
  return s;
}

static void BM_FirstLcs(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::string x = make(rng, n, 4), y = make(rng, n, 4);
  const lcsenum::StringView v(x, y);
  for (auto _ : state) {
    auto p = lcsenum::first_lcs(v, lcsenum::full_x(v), lcsenum::full_y(v));
    benchmark::DoNotOptimize(p);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FirstLcs)->RangeMultiplier(2)->Range(64, 2048)->Complexity(benchmark::oNSquared);

static void BM_FindBranch(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::string x = make(rng, n, 4), y = make(rng, n, 4);
  const lcsenum::StringView v(x, y);
  const auto p = lcsenum::first_lcs(v, lcsenum::full_x(v), lcsenum::full_y(v));
  for (auto _ : state) {
    auto b = lcsenum::find_branch(v, p);
    benchmark::DoNotOptimize(b);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindBranch)->RangeMultiplier(2)->Range(64, 2048)->Complexity(benchmark::oNSquared);

// Time per output over the first 32 outputs.
static void BM_EnumerateDelay(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::string x = make(rng, n, 4), y = make(rng, n, 4);
  const lcsenum::StringView v(x, y);
  std::int64_t outputs = 0;
  for (auto _ : state) {
    lcsenum::LcsEnumerator e(v);
    for (int k = 0; k < 32; ++k) {
      auto p = e.next();
      if (!p) break;
      ++outputs;
      benchmark::DoNotOptimize(p);
    }
  }
  state.SetItemsProcessed(outputs);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateDelay)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);

}  // namespace

BENCHMARK_MAIN();

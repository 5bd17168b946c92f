#include <benchmark/benchmark.h>

#include "permloc/block_construction.hpp"
#include "permloc/coset_census.hpp"
#include "permloc/enumerate.hpp"
#include "permloc/locality.hpp"
#include "permloc/windowed.hpp"

using namespace permloc;

static void BM_VerifyBlockConcat(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PermSet s = block_concat_generate(BlockConcatSpec(n, 2));
  for (auto _ : state) {
    auto res = verify_locality(s, 1);
    benchmark::DoNotOptimize(res.ok());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_VerifyBlockConcat)->Arg(6)->Arg(8);

static void BM_VerifyMedia(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PermSet s = media_generate(MediaSetSpec(n));
  for (auto _ : state) {
    auto res = verify_locality(s, 4);
    benchmark::DoNotOptimize(res.ok());
  }
}
BENCHMARK(BM_VerifyMedia)->Arg(6)->Arg(8);

static void BM_VerifyFullGroup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PermSet s(n);
  for (const auto& p : all_permutations(n)) s.insert(p);
  for (auto _ : state) {
    auto res = verify_locality(s, n - 1);
    benchmark::DoNotOptimize(res.ok());
  }
}
BENCHMARK(BM_VerifyFullGroup)->Arg(4)->Arg(5)->Arg(6);

static void BM_CosetCensus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto census = coset_census(n, 1);
    benchmark::DoNotOptimize(census.max_count);
  }
}
BENCHMARK(BM_CosetCensus)->Arg(4)->Arg(6);

BENCHMARK_MAIN();

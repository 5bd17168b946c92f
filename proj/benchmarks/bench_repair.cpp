#include <benchmark/benchmark.h>

#include "permloc/block_construction.hpp"
#include "permloc/distinct_code.hpp"
#include "permloc/extend.hpp"
#include "permloc/multiperm.hpp"
#include "permloc/storage_sim.hpp"
#include "permloc/windowed.hpp"

using namespace permloc;

static void BM_RepairBlockConcat(benchmark::State& state) {
  BlockConcatSpec spec(8, 2);
  PermSet s = block_concat_generate(spec);
  std::size_t i = 0;
  for (auto _ : state) {
    const Permutation& p = s[i++ % s.size()];
    ErasedView v = ErasedView::of(p, {3});
    auto out = block_concat_repair(v, spec, 3);
    benchmark::DoNotOptimize(out.symbol);
  }
}
BENCHMARK(BM_RepairBlockConcat);

static void BM_RepairWindow(benchmark::State& state) {
  AtSpec spec(10, 2);
  PermSet s = build_at(spec);
  std::size_t i = 0;
  for (auto _ : state) {
    const Permutation& p = s[i++ % s.size()];
    ErasedView v = ErasedView::of(p, {5});
    auto out = at_repair(v, spec, 5);
    benchmark::DoNotOptimize(out.symbol);
  }
}
BENCHMARK(BM_RepairWindow);

static void BM_RepairExtended(benchmark::State& state) {
  ExtendedSpec spec = make_extended_spec(block_concat_generate(BlockConcatSpec(2, 2)), 1,
                                         build_distinct_code(FieldSpec::standard(3), 6));
  PermSet s = extend_set(spec);
  std::size_t i = 0;
  for (auto _ : state) {
    const Permutation& p = s[i++ % s.size()];
    ErasedView v = ErasedView::of(p, {int(i) % 8});
    auto out = extended_repair(v, spec, int(i) % 8);
    benchmark::DoNotOptimize(out.symbol);
  }
}
BENCHMARK(BM_RepairExtended);

static void BM_FullRebuild(benchmark::State& state) {
  BlockConcatSpec spec(8, 2);
  PermSet s = block_concat_generate(spec);
  NodeArray arr(spec);
  arr.store(s[100]);
  for (auto _ : state) {
    arr.erase({0, 2, 4, 6});
    auto outs = arr.repair_all();
    benchmark::DoNotOptimize(outs.size());
  }
}
BENCHMARK(BM_FullRebuild);

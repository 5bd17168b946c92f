#include <benchmark/benchmark.h>

#include "permloc/block_construction.hpp"
#include "permloc/distinct_code.hpp"
#include "permloc/extend.hpp"
#include "permloc/multiperm.hpp"
#include "permloc/perm_poly.hpp"
#include "permloc/windowed.hpp"

using namespace permloc;

static void BM_GenerateBlockConcat(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BlockConcatSpec spec(n, 2);
  for (auto _ : state) {
    PermSet s = block_concat_generate(spec);
    benchmark::DoNotOptimize(s.size());
  }
}
BENCHMARK(BM_GenerateBlockConcat)->Arg(8)->Arg(10);

static void BM_GenerateInfBall(benchmark::State& state) {
  InfBallSpec spec(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    PermSet s = inf_ball_generate(spec);
    benchmark::DoNotOptimize(s.size());
  }
}
BENCHMARK(BM_GenerateInfBall)->Arg(8)->Arg(10);

static void BM_EnumeratePp(benchmark::State& state) {
  FieldSpec f = FieldSpec::standard(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto polys = enumerate_pp(f, 4, PpMode::Auto);
    benchmark::DoNotOptimize(polys.size());
  }
}
BENCHMARK(BM_EnumeratePp)->Arg(3)->Arg(4);

static void BM_ExtendSet(benchmark::State& state) {
  for (auto _ : state) {
    ExtendedSpec spec = make_extended_spec(block_concat_generate(BlockConcatSpec(2, 2)), 1,
                                           build_distinct_code(FieldSpec::standard(3), 6));
    PermSet s = extend_set(spec);
    benchmark::DoNotOptimize(s.size());
  }
}
BENCHMARK(BM_ExtendSet);

static void BM_CountSpreadPatterns(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto count = count_bt(ell, 2);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CountSpreadPatterns)->Arg(8)->Arg(12)->Arg(16);

#include <benchmark/benchmark.h>

#include <random>

#include "hfl/deconvolution.hpp"
#include "hfl/gf2.hpp"
#include "hfl/grid.hpp"
#include "hfl/homology.hpp"
#include "hfl/predictions.hpp"

using namespace hfl;

static void BM_GradeStates_N8(benchmark::State& state) {
  const GridDiagram g = torus_grid(4);
  const GradingContext context(g);
  std::vector<int> alex(std::size_t(g.components), 0);
  for (auto _ : state) {
    int checksum = 0;
    for (const GridState x : enumerate_states(g)) {
      checksum += context.maslov(x);
      context.alexander2_into(x, alex);
      checksum += alex[0];
    }
    benchmark::DoNotOptimize(checksum);
  }
  state.SetItemsProcessed(std::int64_t(state.iterations()) * 40320);
}
BENCHMARK(BM_GradeStates_N8)->Unit(benchmark::kMillisecond);

static void BM_EmptyRectangles_N8(benchmark::State& state) {
  const GridDiagram g = torus_grid(4);
  const RectTable table(g);
  for (auto _ : state) {
    std::size_t count = 0;
    for (const GridState x : enumerate_states(g))
      for_each_empty_rectangle(g, table, x,
                               [&](const GridState&, const Rectangle&) {
                                 ++count;
                               });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(std::int64_t(state.iterations()) * 40320);
}
BENCHMARK(BM_EmptyRectangles_N8)->Unit(benchmark::kMillisecond);

static void BM_TildeHomology(benchmark::State& state) {
  const int n = int(state.range(0));
  const GridDiagram g = torus_grid(n);
  ComputeOptions options;
  options.workers = 1;
  for (auto _ : state) {
    const GradedDimTable t = tilde_homology(g, options);
    benchmark::DoNotOptimize(t.total_rank());
  }
}
BENCHMARK(BM_TildeHomology)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Gf2Rank(benchmark::State& state) {
  const std::size_t dim = std::size_t(state.range(0));
  std::mt19937_64 rng(99);
  Gf2Matrix seed{dim, dim};
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if (rng() & 1) seed.set(r, c);
  for (auto _ : state) {
    Gf2Matrix m = seed;
    benchmark::DoNotOptimize(m.rank_destructive());
  }
}
BENCHMARK(BM_Gf2Rank)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_StripFactors_n4(benchmark::State& state) {
  const GridDiagram g = torus_grid(4);
  const GradedDimTable tilde = tilde_homology(g);
  const FactorSpec f = FactorSpec::for_grid(g);
  for (auto _ : state) {
    const GradedDimTable hat = strip_factors(tilde, f);
    benchmark::DoNotOptimize(hat.total_rank());
  }
}
BENCHMARK(BM_StripFactors_n4)->Unit(benchmark::kMicrosecond);

static void BM_FullTable(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) {
    const PredictionTable t = full_table(n);
    benchmark::DoNotOptimize(t.table.total_rank());
  }
}
BENCHMARK(BM_FullTable)->Arg(5)->Arg(8)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

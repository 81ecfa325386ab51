#include <benchmark/benchmark.h>

#include "concave/extremal.hpp"
#include "concave/oracle.hpp"
#include "concave/region.hpp"

using namespace concave;

static void BM_ScanGrid(benchmark::State& state) {
  const PoleParam pp(0.5);
  const GridSpec spec{12, 6};
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto best = parallel ? scan_grid_parallel(pp, spec, 16) : scan_grid_serial(pp, spec, 16);
    benchmark::DoNotOptimize(best);
  }
  state.SetItemsProcessed(state.iterations() * spec.size());
}
BENCHMARK(BM_ScanGrid)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

static void BM_RegionCloud(benchmark::State& state) {
  const PoleParam pp(0.5);
  const Exec exec = state.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : state) {
    auto r = sample_region_H(pp, 20000, 1, exec);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RegionCloud)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

static void BM_Verify(benchmark::State& state) {
  const Exec exec = state.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : state) {
    auto rep = verify_all({0.5}, 200, 1, exec);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_Verify)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

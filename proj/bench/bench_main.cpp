// Compares the serial reference lane against the OpenMP lane on the two
// hot paths: sweep grids and the variational product maximum. The lanes are
// bitwise-identical in output (tested), so this only measures speed.
#include <benchmark/benchmark.h>

#include "witbound/parallel.hpp"
#include "witbound/sweep.hpp"
#include "witbound/types.hpp"
#include "witbound/witness.hpp"

namespace {

void bench_sweep(benchmark::State& state, witbound::ExecMode mode) {
  witbound::SweepRequest req;
  req.family = witbound::SweepFamily::Mixed2x2;
  req.x = 0.1;
  req.a_min = 0.0;
  req.a_max = 2.0;
  req.steps = 51;
  for (auto _ : state) {
    auto rows = witbound::sweep_rows(req, mode);
    benchmark::DoNotOptimize(rows);
  }
  state.SetItemsProcessed(state.iterations() * req.steps);
}

void bench_variational(benchmark::State& state, witbound::ExecMode mode) {
  const witbound::ComplexMatrix L = witbound::random_correlation_L(3, 3, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(witbound::alpha_variational(L, 3, 3, 20, 500, 7, mode));
  }
}

}  // namespace

BENCHMARK_CAPTURE(bench_sweep, serial, witbound::ExecMode::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_sweep, openmp, witbound::ExecMode::OpenMP)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_variational, serial, witbound::ExecMode::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_variational, openmp, witbound::ExecMode::OpenMP)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

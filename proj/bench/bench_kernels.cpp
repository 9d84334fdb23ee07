#include <benchmark/benchmark.h>

#include "spinor_disc/kernels.hpp"
#include "spinor_disc/spectrum.hpp"

using namespace spinor_disc;
using kernels::Execution;

static Execution mode_of(const benchmark::State& st) { return st.range(0) ? Execution::Parallel : Execution::Serial; }

static void BM_SampleMode(benchmark::State& st) {
  const auto s = spectrum::solve_coefficients({0.25, 0, 5});
  const auto grid = spectrum::clamped_grid(20000, 1e-10);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::sample_mode(s, grid, mode_of(st)));
  st.SetLabel(st.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_SampleMode)->Arg(0)->Arg(1);

static void BM_FigureSurface(benchmark::State& st) {
  const auto x = spectrum::clamped_grid(400, 1e-10);
  std::vector<double> eps;
  for (int i = 0; i < 50; ++i) eps.push_back(0.49 * i / 49);
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::figure_surface(0, 4, kernels::Quantity::B, x, eps, mode_of(st)));
  st.SetLabel(st.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_FigureSurface)->Arg(0)->Arg(1);

static void BM_FdSweep(benchmark::State& st) {
  std::vector<kernels::FdCase> cases;
  for (double e : {0.0, 0.1, 0.25, 0.4, 0.49})
    for (int n = 0; n <= 2; ++n) cases.push_back({e, n});
  for (auto _ : st) benchmark::DoNotOptimize(kernels::fd_sweep(cases, 6, 1000, mode_of(st)));
  st.SetLabel(st.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_FdSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

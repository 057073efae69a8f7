// Serial reference kernels against their OpenMP versions, plus whole runs of
// both solvers with each backend.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "kgwell/kernels.hpp"
#include "kgwell/modes.hpp"
#include "kgwell/solver.hpp"

using namespace kgwell;
using kernels::Backend;
using kernels::cplx;

namespace {

std::vector<cplx> random_vec(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<cplx> v(n);
  for (auto& z : v) z = {d(rng), d(rng)};
  return v;
}

Backend backend_of(const benchmark::State& s) { return s.range(1) ? Backend::openmp : Backend::serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(1) ? "openmp" : "serial"); }

void BM_StripAcceleration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto in = random_vec(n, 1);
  std::vector<cplx> out(n);
  const Backend b = backend_of(state);
  for (auto _ : state) {
    kernels::strip_acceleration(b, in, out, 1.0e6, 2.5);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
  label(state);
}

void BM_MovingWallRhs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto psi = random_vec(n, 1), pi = random_vec(n, 2);
  std::vector<cplx> dpsi(n), dpi(n);
  const kernels::MovingWallCoeffs c{1.0 / double(n - 1), 1.7, 0.5, 0.0};
  const Backend b = backend_of(state);
  for (auto _ : state) {
    kernels::moving_wall_rhs(b, psi, pi, dpsi, dpi, c);
    benchmark::DoNotOptimize(dpi.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
  label(state);
}

void BM_Axpy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = random_vec(n, 1), y = random_vec(n, 2);
  std::vector<cplx> out(n);
  const Backend b = backend_of(state);
  for (auto _ : state) {
    kernels::axpy(b, x, 0.25, y, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
  label(state);
}

void BM_MovingWallSolver(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ModeSpec spec{1, 0.0, WallConfig::lightcone_gauge(0.5, 1.0)};
  const auto init = sample_mode_flat(spec, 2.0, n);
  MovingWallSolverConfig cfg{.wall = spec.wall, .n_xi = n, .t_start = 2.0, .t_end = 2.5};
  cfg.backend = backend_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_moving_wall(cfg, init));
  label(state);
}

void BM_StripSolver(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ModeSpec spec{1, 0.0, WallConfig::lightcone_gauge(0.5, 1.0)};
  const auto init = sample_mode_hyp(spec, 2.0, n);
  StripSolverConfig cfg;
  cfg.n_u = n;
  cfg.tau_start = std::log(2.0);
  cfg.tau_end = std::log(3.0);
  cfg.backend = backend_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_strip(cfg, init));
  label(state);
}

void kernel_sizes(benchmark::internal::Benchmark* b) {
  for (long n : {1L << 10, 1L << 14, 1L << 18, 1L << 21}) {
    for (long omp : {0L, 1L}) b->Args({n, omp});
  }
}

void solver_sizes(benchmark::internal::Benchmark* b) {
  for (long n : {1024L, 4096L}) {
    for (long omp : {0L, 1L}) b->Args({n, omp});
  }
}

}  // namespace

BENCHMARK(BM_StripAcceleration)->Apply(kernel_sizes);
BENCHMARK(BM_MovingWallRhs)->Apply(kernel_sizes);
BENCHMARK(BM_Axpy)->Apply(kernel_sizes);
BENCHMARK(BM_MovingWallSolver)->Apply(solver_sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StripSolver)->Apply(solver_sizes)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

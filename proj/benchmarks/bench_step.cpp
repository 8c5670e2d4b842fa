// Full IMEX step cost on 1D and 2D grids near the coexistence state.

#include <benchmark/benchmark.h>

#include <cmath>

#include "chemolv/grid.hpp"
#include "chemolv/params.hpp"
#include "chemolv/sim.hpp"

namespace {

chemolv::SimState perturbed_state(const chemolv::Grid& g) {
  chemolv::SimState s;
  s.t = 0.0;
  s.u = chemolv::make_field(g);
  s.v = chemolv::make_field(g);
  s.w = chemolv::make_field(g);
  const double pi = 3.14159265358979323846;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      double profile = std::cos(pi * g.center_x(i) / g.Lx);
      if (g.dim == 2) profile *= std::cos(pi * g.center_y(j) / g.Ly);
      const double f = 1.0 + 0.1 * profile;
      s.u.at(i, j) = 0.37 * f;
      s.v.at(i, j) = 0.37 * f;
      s.w.at(i, j) = 0.74 * f;
    }
  }
  return s;
}

chemolv::Params bench_params() {
  chemolv::Params p;
  p.chi1 = p.chi2 = 0.5;
  p.a1 = p.b2 = 1.5;
  p.a3 = p.a4 = p.b3 = p.b4 = 0.1;
  return p;
}

void BM_step_1d(benchmark::State& state) {
  const chemolv::Grid g = chemolv::make_grid_1d(static_cast<int>(state.range(0)), 1.0);
  const chemolv::Params p = bench_params();
  chemolv::SimState s = perturbed_state(g);
  for (auto _ : state) {
    s = chemolv::step(s, p, 1e-3);
    benchmark::DoNotOptimize(s.u.values.data());
  }
}
BENCHMARK(BM_step_1d)->Arg(128)->Arg(1024);

void BM_step_2d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const chemolv::Grid g = chemolv::make_grid_2d(n, n, 1.0, 1.0);
  const chemolv::Params p = bench_params();
  chemolv::SimState s = perturbed_state(g);
  for (auto _ : state) {
    s = chemolv::step(s, p, 1e-3);
    benchmark::DoNotOptimize(s.u.values.data());
  }
}
BENCHMARK(BM_step_2d)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();

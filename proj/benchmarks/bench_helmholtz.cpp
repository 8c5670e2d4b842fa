// Implicit-stage solver cost: Thomas algorithm in 1D, conjugate gradients
// in 2D.

#include <benchmark/benchmark.h>

#include <cmath>

#include "chemolv/grid.hpp"
#include "chemolv/helmholtz.hpp"

namespace {

chemolv::Field cosine_field(const chemolv::Grid& g, double amplitude) {
  chemolv::Field f = chemolv::make_field(g);
  const double pi = 3.14159265358979323846;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      double x = std::cos(pi * g.center_x(i) / g.Lx);
      if (g.dim == 2) x *= std::cos(pi * g.center_y(j) / g.Ly);
      f.at(i, j) = 1.0 + amplitude * x;
    }
  }
  return f;
}

void BM_solve_1d(benchmark::State& state) {
  const chemolv::Grid g = chemolv::make_grid_1d(static_cast<int>(state.range(0)), 1.0);
  const chemolv::Field rhs = cosine_field(g, 0.5);
  for (auto _ : state) {
    chemolv::Field x = chemolv::implicit_helmholtz_solve(rhs, 1.0, 1.0, 1e-3);
    benchmark::DoNotOptimize(x.values.data());
  }
}
BENCHMARK(BM_solve_1d)->Arg(256)->Arg(4096);

void BM_solve_2d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const chemolv::Grid g = chemolv::make_grid_2d(n, n, 1.0, 1.0);
  const chemolv::Field rhs = cosine_field(g, 0.5);
  for (auto _ : state) {
    chemolv::Field x = chemolv::implicit_helmholtz_solve(rhs, 1.0, 1.0, 1e-3);
    benchmark::DoNotOptimize(x.values.data());
  }
}
BENCHMARK(BM_solve_2d)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();

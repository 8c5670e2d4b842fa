// Stencil throughput on representative grid sizes.

#include <benchmark/benchmark.h>

#include <cmath>

#include "chemolv/grid.hpp"
#include "chemolv/stencils.hpp"

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

void BM_laplacian_1d(benchmark::State& state) {
  const chemolv::Grid g = chemolv::make_grid_1d(static_cast<int>(state.range(0)), 1.0);
  const chemolv::Field f = cosine_field(g, 0.5);
  for (auto _ : state) {
    chemolv::Field out = chemolv::laplacian_neumann(f);
    benchmark::DoNotOptimize(out.values.data());
  }
}
BENCHMARK(BM_laplacian_1d)->Arg(256)->Arg(4096);

void BM_laplacian_2d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const chemolv::Grid g = chemolv::make_grid_2d(n, n, 1.0, 1.0);
  const chemolv::Field f = cosine_field(g, 0.5);
  for (auto _ : state) {
    chemolv::Field out = chemolv::laplacian_neumann(f);
    benchmark::DoNotOptimize(out.values.data());
  }
}
BENCHMARK(BM_laplacian_2d)->Arg(64)->Arg(256);

void BM_chemo_divergence_1d(benchmark::State& state) {
  const chemolv::Grid g = chemolv::make_grid_1d(static_cast<int>(state.range(0)), 1.0);
  const chemolv::Field u = cosine_field(g, 0.3);
  const chemolv::Field w = cosine_field(g, 0.5);
  for (auto _ : state) {
    chemolv::Field out = chemolv::chemo_divergence(u, w);
    benchmark::DoNotOptimize(out.values.data());
  }
}
BENCHMARK(BM_chemo_divergence_1d)->Arg(256)->Arg(4096);

void BM_integrate_2d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const chemolv::Grid g = chemolv::make_grid_2d(n, n, 1.0, 1.0);
  const chemolv::Field f = cosine_field(g, 0.5);
  for (auto _ : state) {
    double s = chemolv::integrate(f);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_integrate_2d)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();

// Grid construction and the no-flux spatial operators: exactness on
// constants, discrete eigenvectors of the Laplacian, conservation, and
// second-order convergence on manufactured fields.

#include <doctest.h>

#include <cmath>
#include <random>

#include "chemolv/errors.hpp"
#include "chemolv/grid.hpp"
#include "chemolv/stencils.hpp"

#include "oracles.hpp"

using namespace chemolv;

namespace {

constexpr double kPi = 3.14159265358979323846;

Field random_field(const Grid& g, std::mt19937_64& rng, double lo, double hi) {
  Field f = make_field(g);
  for (double& x : f.values) x = oracle::uniform(rng, lo, hi);
  return f;
}

// Largest pointwise error of the discrete Laplacian of cos(pi x / L)
// against the continuous one.
double laplacian_error(int n) {
  const Grid g = make_grid_1d(n, 2.0);
  Field f = make_field(g);
  for (int i = 0; i < n; ++i) f[i] = std::cos(kPi * g.center_x(i) / g.Lx);
  const Field lap = laplacian_neumann(f);
  const double factor = -(kPi / g.Lx) * (kPi / g.Lx);
  double err = 0.0;
  for (int i = 0; i < n; ++i) err = std::max(err, std::abs(lap[i] - factor * f[i]));
  return err;
}

// Same for the chemotactic divergence with u = 2 + sin(pi x / L) and
// w = cos(pi x / L); the exact value is u' w' + u w''.
double chemo_error(int n) {
  const Grid g = make_grid_1d(n, 2.0);
  const double q = kPi / g.Lx;
  Field u = make_field(g), w = make_field(g);
  for (int i = 0; i < n; ++i) {
    const double x = g.center_x(i);
    u[i] = 2.0 + std::sin(q * x);
    w[i] = std::cos(q * x);
  }
  const Field div = chemo_divergence(u, w);
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = g.center_x(i);
    const double exact = q * std::cos(q * x) * (-q * std::sin(q * x)) +
                         (2.0 + std::sin(q * x)) * (-q * q * std::cos(q * x));
    err = std::max(err, std::abs(div[i] - exact));
  }
  return err;
}

}  // namespace

TEST_SUITE("discretization") {

TEST_CASE("grid construction") {
  const Grid g = make_grid_1d(128, 1.0);
  CHECK(g.dim == 1);
  CHECK(g.nx == 128);
  CHECK(g.ny == 1);
  CHECK(g.hx == doctest::Approx(1.0 / 128).epsilon(1e-15));
  CHECK(g.measure() == 1.0);
  CHECK(g.cell_volume() == g.hx);
  CHECK(g.center_x(0) == doctest::Approx(0.5 / 128).epsilon(1e-15));
  CHECK(g.center_x(127) == doctest::Approx(1.0 - 0.5 / 128).epsilon(1e-15));

  const Grid h = make_grid_2d(8, 16, 2.0, 4.0);
  CHECK(h.dim == 2);
  CHECK(h.cell_count() == 128);
  CHECK(h.hx == 0.25);
  CHECK(h.hy == 0.25);
  CHECK(h.measure() == 8.0);
  CHECK(h.cell_volume() == doctest::Approx(0.0625).epsilon(1e-15));

  CHECK_THROWS_AS(make_grid_1d(3, 1.0), ValidationError);
  CHECK_THROWS_AS(make_grid_1d(16, 0.0), ValidationError);
  CHECK_THROWS_AS(make_grid_1d(16, -1.0), ValidationError);
  CHECK_THROWS_AS(make_grid_2d(8, 3, 1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(make_grid_2d(8, 8, 1.0, std::nan("")), ValidationError);
}

TEST_CASE("fields and grid identity") {
  const Grid g = make_grid_2d(4, 5, 1.0, 1.0);
  Field f = make_field(g, 2.5);
  CHECK(f.values.size() == 20);
  CHECK(f[7] == 2.5);
  f.at(3, 4) = -1.0;
  CHECK(f[19] == -1.0);

  const Field other = make_field(make_grid_2d(4, 5, 1.0, 2.0));
  CHECK(same_grid(f, make_field(g)));
  CHECK_FALSE(same_grid(f, other));
}

TEST_CASE("integrate is exact on constants and matches plain summation") {
  const Grid g = make_grid_1d(128, 1.0);
  CHECK(integrate(make_field(g, 0.7311)) == doctest::Approx(0.7311).epsilon(1e-15));

  const Grid g2 = make_grid_2d(24, 12, 2.0, 0.5);
  CHECK(integrate(make_field(g2, 3.0)) == doctest::Approx(3.0).epsilon(1e-15));

  std::mt19937_64 rng(11);
  const Field f = random_field(g2, rng, -1.0, 1.0);
  long double acc = 0.0L;
  for (double x : f.values) acc += static_cast<long double>(x);
  acc *= static_cast<long double>(g2.cell_volume());
  CHECK(integrate(f) == doctest::Approx(static_cast<double>(acc)).epsilon(1e-14));
}

TEST_CASE("laplacian annihilates constants and conserves mass") {
  const Grid g = make_grid_1d(64, 3.0);
  const Field lap = laplacian_neumann(make_field(g, 4.2));
  for (double x : lap.values) CHECK(x == 0.0);

  std::mt19937_64 rng(12);
  const Field f = random_field(g, rng, 0.0, 2.0);
  CHECK(std::abs(integrate(laplacian_neumann(f))) < 1e-12 * linf_norm(f) / g.hx);

  const Grid g2 = make_grid_2d(12, 20, 1.0, 2.0);
  const Field f2 = random_field(g2, rng, 0.0, 2.0);
  for (double x : laplacian_neumann(make_field(g2, 1.0)).values) CHECK(x == 0.0);
  CHECK(std::abs(integrate(laplacian_neumann(f2))) < 1e-12 * linf_norm(f2) / g2.hx);
}

TEST_CASE("laplacian is self-adjoint for the cell inner product") {
  const Grid g = make_grid_2d(10, 14, 1.5, 0.75);
  std::mt19937_64 rng(13);
  const Field f = random_field(g, rng, -1.0, 1.0);
  const Field h = random_field(g, rng, -1.0, 1.0);
  const Field lf = laplacian_neumann(f);
  const Field lh = laplacian_neumann(h);
  double fg = 0.0, gf = 0.0;
  for (int idx = 0; idx < g.cell_count(); ++idx) {
    fg += lf[idx] * h[idx];
    gf += f[idx] * lh[idx];
  }
  CHECK(fg == doctest::Approx(gf).epsilon(1e-11));
}

TEST_CASE("half-integer cosines are exact eigenvectors of the laplacian") {
  const int n = 32;
  const Grid g = make_grid_1d(n, 1.0);
  const int mode = 3;
  Field f = make_field(g);
  for (int i = 0; i < n; ++i) f[i] = std::cos(mode * kPi * (i + 0.5) / n);
  const double s = std::sin(0.5 * mode * kPi / n);
  const double mu = 4.0 * s * s / (g.hx * g.hx);
  const Field lap = laplacian_neumann(f);
  for (int i = 0; i < n; ++i) {
    CHECK(lap[i] == doctest::Approx(-mu * f[i]).epsilon(1e-11).scale(mu));
  }

  // Tensor-product mode in two dimensions.
  const Grid g2 = make_grid_2d(16, 24, 2.0, 1.0);
  Field t = make_field(g2);
  for (int j = 0; j < g2.ny; ++j) {
    for (int i = 0; i < g2.nx; ++i) {
      t.at(i, j) = std::cos(2.0 * kPi * (i + 0.5) / g2.nx) *
                   std::cos(3.0 * kPi * (j + 0.5) / g2.ny);
    }
  }
  const double sx = std::sin(kPi / g2.nx);
  const double sy = std::sin(1.5 * kPi / g2.ny);
  const double lam = 4.0 * sx * sx / (g2.hx * g2.hx) + 4.0 * sy * sy / (g2.hy * g2.hy);
  const Field lap2 = laplacian_neumann(t);
  for (int idx = 0; idx < g2.cell_count(); ++idx) {
    CHECK(lap2[idx] == doctest::Approx(-lam * t[idx]).epsilon(1e-11).scale(lam));
  }
}

TEST_CASE("chemotactic flux divergence conserves mass") {
  std::mt19937_64 rng(14);
  const Grid g = make_grid_1d(48, 2.0);
  const Field u = random_field(g, rng, 0.0, 3.0);
  const Field w = random_field(g, rng, 0.0, 1.0);
  const Field div = chemo_divergence(u, w);
  CHECK(std::abs(integrate(div)) < 1e-11);

  const Grid g2 = make_grid_2d(16, 10, 1.0, 1.0);
  const Field u2 = random_field(g2, rng, 0.0, 3.0);
  const Field w2 = random_field(g2, rng, 0.0, 1.0);
  CHECK(std::abs(integrate(chemo_divergence(u2, w2))) < 1e-11);

  // Constant signal produces no flux at all.
  for (double x : chemo_divergence(u, make_field(g, 5.0)).values) CHECK(x == 0.0);

  const Field wrong = make_field(make_grid_1d(48, 1.0));
  CHECK_THROWS_AS(chemo_divergence(u, wrong), InvalidArgument);
}

TEST_CASE("both operators converge at second order") {
  const double lap_ratio = laplacian_error(32) / laplacian_error(64);
  CHECK(lap_ratio > 3.5);
  CHECK(lap_ratio < 4.5);

  const double div_ratio = chemo_error(32) / chemo_error(64);
  CHECK(div_ratio > 3.5);
  CHECK(div_ratio < 4.5);
}

TEST_CASE("gradient square quadrature") {
  const Grid g = make_grid_1d(40, 2.5);
  CHECK(grad_sq_integral(make_field(g, 3.0)) == 0.0);

  // f = x has unit gradient on every interior face and the face volumes
  // tile the domain.
  Field lin = make_field(g);
  for (int i = 0; i < g.nx; ++i) lin[i] = g.center_x(i);
  CHECK(grad_sq_integral(lin) == doctest::Approx(2.5).epsilon(1e-13));

  const Grid g2 = make_grid_2d(12, 8, 1.0, 2.0);
  Field lin2 = make_field(g2);
  for (int j = 0; j < g2.ny; ++j) {
    for (int i = 0; i < g2.nx; ++i) lin2.at(i, j) = 2.0 * g2.center_y(j);
  }
  CHECK(grad_sq_integral(lin2) == doctest::Approx(4.0 * g2.measure()).epsilon(1e-13));
}

TEST_CASE("norm helpers") {
  const Grid g = make_grid_1d(8, 1.0);
  Field f = make_field(g, 1.0);
  f[3] = -7.0;
  f[5] = 2.0;
  CHECK(linf_norm(f) == 7.0);
  CHECK(min_value(f) == -7.0);
}

}  // TEST_SUITE

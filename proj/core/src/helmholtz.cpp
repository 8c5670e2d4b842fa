#include "chemolv/helmholtz.hpp"

#include <cmath>
#include <vector>

#include "chemolv/errors.hpp"
#include "chemolv/stencils.hpp"

namespace chemolv {

namespace {

// Direct solve of the symmetric tridiagonal system arising in 1D.  Interior
// rows couple both neighbors; boundary rows lose one coupling to the mirror
// ghost, which keeps the row sums at 1 + dt*decay.
Field solve_tridiagonal(const Field& rhs, double diffusion, double decay, double dt) {
  const Grid& g = rhs.grid;
  const int n = g.nx;
  const double beta = dt * diffusion / (g.hx * g.hx);
  const double base = 1.0 + dt * decay;

  std::vector<double> diag(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int couplings = (i > 0 ? 1 : 0) + (i < n - 1 ? 1 : 0);
    diag[static_cast<std::size_t>(i)] = base + couplings * beta;
  }
  const double off = -beta;

  // Thomas algorithm.
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  Field x = rhs;
  c[0] = off / diag[0];
  x[0] = rhs[0] / diag[0];
  for (int i = 1; i < n; ++i) {
    const std::size_t s = static_cast<std::size_t>(i);
    const double m = diag[s] - off * c[s - 1];
    c[s] = off / m;
    x[s] = (rhs[s] - off * x[s - 1]) / m;
  }
  for (int i = n - 2; i >= 0; --i) {
    const std::size_t s = static_cast<std::size_t>(i);
    x[s] -= c[s] * x[s + 1];
  }
  return x;
}

// Conjugate gradients on A x = rhs with A = (1 + dt*decay) I - dt*diff*Lap_N.
Field solve_cg(const Field& rhs, double diffusion, double decay, double dt) {
  const double base = 1.0 + dt * decay;

  const auto apply = [&](const Field& x) {
    Field ax = laplacian_neumann(x);
    for (std::size_t i = 0; i < ax.values.size(); ++i) {
      ax.values[i] = base * x.values[i] - dt * diffusion * ax.values[i];
    }
    return ax;
  };

  const auto dot = [](const Field& a, const Field& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * b.values[i];
    return s;
  };

  // Starting from rhs/base makes constant right-hand sides exact
  // immediately: constants lie in the kernel of the Laplacian.
  Field x = rhs;
  for (double& v : x.values) v /= base;

  Field r = apply(x);
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    r.values[i] = rhs.values[i] - r.values[i];
  }

  const double rhs_norm = std::sqrt(dot(rhs, rhs));
  const double target = 1e-10 * (rhs_norm > 0.0 ? rhs_norm : 1.0);

  double rr = dot(r, r);
  if (std::sqrt(rr) <= target) return x;

  Field p = r;
  const int max_iter = 10000;
  for (int it = 0; it < max_iter; ++it) {
    const Field ap = apply(p);
    const double p_ap = dot(p, ap);
    if (!(p_ap > 0.0) || !std::isfinite(p_ap)) {
      throw SolverDiverged("implicit_helmholtz_solve: conjugate gradients lost definiteness");
    }
    const double alpha = rr / p_ap;
    for (std::size_t i = 0; i < x.values.size(); ++i) {
      x.values[i] += alpha * p.values[i];
      r.values[i] -= alpha * ap.values[i];
    }
    const double rr_new = dot(r, r);
    if (std::sqrt(rr_new) <= target) return x;
    const double beta = rr_new / rr;
    rr = rr_new;
    for (std::size_t i = 0; i < p.values.size(); ++i) {
      p.values[i] = r.values[i] + beta * p.values[i];
    }
  }
  throw SolverDiverged("implicit_helmholtz_solve: conjugate gradients exceeded iteration budget");
}

}  // namespace

Field implicit_helmholtz_solve(const Field& rhs, double diffusion, double decay, double dt) {
  if (!(diffusion > 0.0) || !(decay >= 0.0) || !(dt > 0.0)) {
    throw InvalidArgument("implicit_helmholtz_solve: needs diffusion > 0, decay >= 0, dt > 0");
  }
  if (rhs.grid.dim == 1) {
    return solve_tridiagonal(rhs, diffusion, decay, dt);
  }
  return solve_cg(rhs, diffusion, decay, dt);
}

}  // namespace chemolv

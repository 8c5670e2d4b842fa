#include "chemolv/equilibrium.hpp"

#include <algorithm>
#include <cmath>

#include "chemolv/errors.hpp"

namespace chemolv {

const char* to_string(EquilibriumKind k) {
  return k == EquilibriumKind::Coexistence ? "coexistence" : "semi_trivial";
}

Equilibrium coexistence_equilibrium(const Params& p) {
  const double o = p.omega_measure;
  const double A1 = p.a1 + p.a3 * o;
  const double A2 = p.a2 + p.a4 * o;
  const double B1 = p.b1 + p.b3 * o;
  const double B2 = p.b2 + p.b4 * o;

  const double det = A1 * B2 - A2 * B1;
  if (det == 0.0) {
    throw SingularSystem("coexistence state: interaction matrix is singular");
  }

  Equilibrium e;
  e.kind = EquilibriumKind::Coexistence;
  e.u = (p.a0 * B2 - p.b0 * A2) / det;
  e.v = (p.b0 * A1 - p.a0 * B1) / det;
  e.w = (p.k * e.u + p.l * e.v) / p.lambda;

  if (!(e.u > 0.0) || !(e.v > 0.0) || !(e.w > 0.0)) {
    throw NonpositiveEquilibrium("coexistence state has a nonpositive component");
  }
  return e;
}

Equilibrium semitrivial_equilibrium(const Params& p) {
  const double B2 = p.b2 + p.b4 * p.omega_measure;
  if (B2 == 0.0) {
    throw SingularSystem("u-extinction state: effective v self-limitation vanishes");
  }

  Equilibrium e;
  e.kind = EquilibriumKind::SemiTrivial;
  e.u = 0.0;
  e.v = p.b0 / B2;
  e.w = p.l * e.v / p.lambda;

  if (!(e.v > 0.0) || !(e.w > 0.0)) {
    throw NonpositiveEquilibrium("u-extinction state has a nonpositive component");
  }
  return e;
}

double equilibrium_residual(const Params& p, const Equilibrium& e) {
  const double o = p.omega_measure;

  // Each balance is scaled by its largest contributing term so that true
  // equilibria land at roundoff regardless of coefficient magnitudes.
  const auto scaled = [](double residual, std::initializer_list<double> terms) {
    double scale = 0.0;
    for (double t : terms) scale = std::max(scale, std::abs(t));
    if (scale == 0.0) return std::abs(residual);
    return std::abs(residual) / scale;
  };

  const double gu = p.a0 - p.a1 * e.u - p.a2 * e.v - (p.a3 * e.u + p.a4 * e.v) * o;
  const double gv = p.b0 - p.b1 * e.u - p.b2 * e.v - (p.b3 * e.u + p.b4 * e.v) * o;

  // Reaction residuals carry the density prefactor: extinct components
  // satisfy their law exactly.
  const double ru = e.u == 0.0 ? 0.0
                               : scaled(gu, {p.a0, p.a1 * e.u, p.a2 * e.v,
                                             p.a3 * e.u * o, p.a4 * e.v * o});
  const double rv = e.v == 0.0 ? 0.0
                               : scaled(gv, {p.b0, p.b1 * e.u, p.b2 * e.v,
                                             p.b3 * e.u * o, p.b4 * e.v * o});
  const double rw = scaled(p.k * e.u + p.l * e.v - p.lambda * e.w,
                           {p.k * e.u, p.l * e.v, p.lambda * e.w});

  return std::max({ru, rv, rw});
}

}  // namespace chemolv

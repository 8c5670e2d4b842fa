#include "chemolv/stability.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "chemolv/errors.hpp"
#include "chemolv/regime.hpp"

namespace chemolv {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_nonlocal_signs(const Params& p, const char* which) {
  if (p.a3 < 0.0 || p.a4 < 0.0 || p.b3 < 0.0 || p.b4 < 0.0) {
    throw RegimeMismatch(std::string("check_stability(") + which +
                         "): nonlocal coefficients must be nonnegative");
  }
}

// Left side of the coupling condition, reused as the window denominator.
double coupling_lhs(const Params& p, double w1, double w2) {
  return p.b1 * p.l * p.l * w1 + p.a2 * p.k * p.k * w2;
}

double coupling_rhs(const Params& p) { return 2.0 * p.a2 * p.b1 * p.k * p.l; }

}  // namespace

const char* to_string(StabilityCase c) {
  return c == StabilityCase::Weak ? "weak" : "asymmetric";
}

double varpi1(const Params& p) {
  return p.a1 - (p.a4 + p.b3) * p.omega_measure;
}

double varpi2(const Params& p) {
  return p.b2 - (p.a4 + p.b3) * p.omega_measure;
}

double varpi3(const Params& p, const Equilibrium& coexistence) {
  if (coexistence.kind != EquilibriumKind::Coexistence) {
    throw InvalidArgument("varpi3: needs the coexistence state");
  }
  return (p.d1 * p.a2 * p.chi2 * p.chi2 * coexistence.v +
          p.d2 * p.b1 * p.chi1 * p.chi1 * coexistence.u) /
         (16.0 * p.d1 * p.d2 * p.d3 * p.a2 * p.b1 * p.lambda);
}

double varpi3_bar(const Params& p, const Equilibrium& semitrivial) {
  if (semitrivial.kind != EquilibriumKind::SemiTrivial) {
    throw InvalidArgument("varpi3_bar: needs the u-extinction state");
  }
  return p.chi2 * p.chi2 * semitrivial.v /
         (16.0 * p.d2 * p.d3 * p.b1 * p.lambda);
}

Varpi compute_varpi(const Params& p) {
  Varpi w;
  w.varpi1 = varpi1(p);
  w.varpi2 = varpi2(p);
  w.varpi3 = varpi3(p, coexistence_equilibrium(p));
  w.varpi3_bar = varpi3_bar(p, semitrivial_equilibrium(p));
  return w;
}

DeltaInterval delta_interval(const Params& p, StabilityCase c) {
  const double w1 = varpi1(p);
  const double w2 = varpi2(p);

  const double den = coupling_lhs(p, w1, w2) - coupling_rhs(p);
  if (!(den > 0.0)) {
    throw EmptyWindow("delta_interval: coupling condition fails, no admissible weight");
  }

  DeltaInterval iv;
  iv.hi = 4.0 * p.lambda * p.a2 * (w1 * w2 - p.a2 * p.b1) / den;
  if (c == StabilityCase::Weak) {
    iv.lo = 4.0 * p.lambda * p.a2 * varpi3(p, coexistence_equilibrium(p));
  } else {
    iv.lo = 4.0 * p.lambda * p.a2 * varpi3_bar(p, semitrivial_equilibrium(p));
  }

  if (!(iv.lo < iv.hi)) {
    throw EmptyWindow("delta_interval: admissible weight window is empty");
  }
  return iv;
}

MatrixPair build_matrices(const Params& p, double delta, StabilityCase c) {
  if (!(delta > 0.0)) {
    throw InvalidArgument("build_matrices: delta must be positive");
  }

  const double w1 = varpi1(p);
  const double w2 = varpi2(p);

  SymMatrix P(3);
  P(0, 0) = w1;
  P(0, 1) = P(1, 0) = p.a2;
  P(0, 2) = P(2, 0) = -0.5 * p.k * delta;
  P(1, 1) = p.a2 * w2 / p.b1;
  P(1, 2) = P(2, 1) = -0.5 * p.l * delta;
  P(2, 2) = p.lambda * delta;

  if (c == StabilityCase::Weak) {
    const Equilibrium e = coexistence_equilibrium(p);
    SymMatrix S(3);
    S(0, 0) = p.d1 * e.u;
    S(0, 1) = S(1, 0) = 0.0;
    S(0, 2) = S(2, 0) = -0.5 * p.chi1 * e.u;
    S(1, 1) = p.a2 * p.d2 * e.v / p.b1;
    S(1, 2) = S(2, 1) = -0.5 * p.a2 * p.chi2 * e.v / p.b1;
    S(2, 2) = p.d3 * delta;
    return {P, S};
  }

  const Equilibrium e = semitrivial_equilibrium(p);
  SymMatrix S(2);
  S(0, 0) = p.a2 * p.d2 * e.v / p.b1;
  S(0, 1) = S(1, 0) = -0.5 * p.a2 * p.chi2 * e.v / p.b1;
  S(1, 1) = p.d3 * delta;
  return {P, S};
}

StabilityResult check_stability(const Params& p, StabilityCase c) {
  const RegimeClass rc = classify_regime(p);
  if (c == StabilityCase::Weak) {
    if (rc.regime != Regime::Weak) {
      throw RegimeMismatch(
          std::string("check_stability(weak): parameters classify as ") +
          to_string(rc.regime));
    }
    require_nonlocal_signs(p, "weak");
  } else {
    if (rc.regime != Regime::StronglyAsymmetric) {
      throw RegimeMismatch(
          std::string("check_stability(asymmetric): parameters classify as ") +
          to_string(rc.regime));
    }
    require_nonlocal_signs(p, "asymmetric");
  }

  const double w1 = varpi1(p);
  const double w2 = varpi2(p);

  Varpi varpi;
  varpi.varpi1 = w1;
  varpi.varpi2 = w2;
  varpi.varpi3 = kNaN;
  varpi.varpi3_bar = kNaN;

  const double coupling = coupling_lhs(p, w1, w2);
  double w3 = kNaN;

  StabilityResult result;
  if (c == StabilityCase::Weak) {
    varpi.varpi3 = varpi3(p, coexistence_equilibrium(p));
    varpi.varpi3_bar = varpi3_bar(p, semitrivial_equilibrium(p));
    w3 = varpi.varpi3;
  } else {
    varpi.varpi3_bar = varpi3_bar(p, semitrivial_equilibrium(p));
    w3 = varpi.varpi3_bar;
    result.report.add("u_damping", w1, 0.0);
  }

  result.report.add("signal_coupling", coupling, coupling_rhs(p));
  result.report.add("damping_gap", w1 * w2,
                    p.a2 * p.b1 + (coupling - coupling_rhs(p)) * w3);

  if (!result.report.overall) {
    return result;
  }

  StabilityCertificate cert;
  cert.varpi = varpi;
  cert.delta = delta_interval(p, c);
  cert.delta_chosen = cert.delta.midpoint();
  MatrixPair mats = build_matrices(p, cert.delta_chosen, c);
  cert.P = mats.P;
  cert.S = mats.S;
  const Definiteness dp = is_positive_definite(cert.P);
  const Definiteness ds = is_positive_definite(cert.S);
  cert.minors_p = dp.minors;
  cert.minors_s = ds.minors;
  cert.positive_definite = dp.positive_definite && ds.positive_definite;
  result.certificate = std::move(cert);
  return result;
}

}  // namespace chemolv

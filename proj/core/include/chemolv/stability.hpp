#pragma once

#include <optional>
#include <vector>

#include "chemolv/equilibrium.hpp"
#include "chemolv/matrix.hpp"
#include "chemolv/params.hpp"
#include "chemolv/report.hpp"

namespace chemolv {

// Which large-time attractor is being certified: the coexistence state in
// the weak regime, or the u-extinction state in the strongly asymmetric one.
enum class StabilityCase { Weak, Asymmetric };

const char* to_string(StabilityCase c);

// Damping and interaction quantities entering the stability conditions:
//
//   varpi1 = a1 - a4|O| - b3|O|
//   varpi2 = b2 - a4|O| - b3|O|
//   varpi3     = (d1 a2 chi2^2 v* + d2 b1 chi1^2 u*) / (16 d1 d2 d3 a2 b1 lambda)
//   varpi3_bar = chi2^2 v~ / (16 d2 d3 b1 lambda)
//
// with (u*, v*) the coexistence state and v~ the u-extinction level.
struct Varpi {
  double varpi1 = 0.0;
  double varpi2 = 0.0;
  double varpi3 = 0.0;
  double varpi3_bar = 0.0;
};

// Computes all four quantities; propagates equilibrium errors when either
// reference state fails to exist.
Varpi compute_varpi(const Params& p);

double varpi1(const Params& p);
double varpi2(const Params& p);
double varpi3(const Params& p, const Equilibrium& coexistence);
double varpi3_bar(const Params& p, const Equilibrium& semitrivial);

// Admissible window (lo, hi) for the weight delta of the squared-signal term
// in the Lyapunov functional:
//
//   hi = 4 lambda a2 (varpi1 varpi2 - a2 b1)
//        / (b1 l^2 varpi1 + a2 k^2 varpi2 - 2 a2 b1 k l)
//   lo = 4 lambda a2 varpi3        (weak case)
//   lo = 4 lambda a2 varpi3_bar    (asymmetric case)
//
// Throws EmptyWindow when the window is empty or its denominator is not
// positive.
struct DeltaInterval {
  double lo = 0.0;
  double hi = 0.0;
  double midpoint() const { return 0.5 * (lo + hi); }
};

DeltaInterval delta_interval(const Params& p, StabilityCase c);

// Quadratic forms whose positive definiteness drives the decay estimate.
// The reaction form P is always 3x3; the gradient form S is 3x3 in the weak
// case and 2x2 in the asymmetric case (u drops out of the gradient terms).
struct MatrixPair {
  SymMatrix P;
  SymMatrix S;
};

MatrixPair build_matrices(const Params& p, double delta, StabilityCase c);

// Everything needed to audit a successful stability check.
struct StabilityCertificate {
  Varpi varpi;                     // varpi3 or varpi3_bar is NaN when its
                                   // reference state does not exist
  DeltaInterval delta;
  double delta_chosen = 0.0;       // midpoint of the window
  SymMatrix P{3};
  SymMatrix S{3};
  std::vector<double> minors_p;
  std::vector<double> minors_s;
  bool positive_definite = false;
};

struct StabilityResult {
  HypothesisReport report;
  std::optional<StabilityCertificate> certificate;  // present iff overall passed
};

// Evaluates the stability hypotheses for the requested case.
//
// Weak case ("signal_coupling", "damping_gap"), requires regime Weak and
// a3, a4, b3, b4 >= 0:
//
//   b1 l^2 varpi1 + a2 k^2 varpi2 > 2 a2 b1 k l
//   varpi1 varpi2 > a2 b1 + (b1 l^2 varpi1 + a2 k^2 varpi2 - 2 a2 b1 k l) varpi3
//
// Asymmetric case adds "u_damping" (varpi1 > 0) and replaces varpi3 by
// varpi3_bar; requires regime StronglyAsymmetric and a3, a4, b3, b4 >= 0.
//
// Throws RegimeMismatch when the regime or sign preconditions fail;
// propagates equilibrium errors.
StabilityResult check_stability(const Params& p, StabilityCase c);

}  // namespace chemolv

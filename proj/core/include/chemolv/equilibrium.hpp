#pragma once

#include "chemolv/params.hpp"

namespace chemolv {

enum class EquilibriumKind { Coexistence, SemiTrivial };

const char* to_string(EquilibriumKind k);

// Spatially homogeneous steady state (u, v, w) of the kinetic system.
struct Equilibrium {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  EquilibriumKind kind = EquilibriumKind::Coexistence;

  bool operator==(const Equilibrium&) const = default;
};

// Positive coexistence state.  With A1 = a1 + a3|O|, A2 = a2 + a4|O|,
// B1 = b1 + b3|O|, B2 = b2 + b4|O| and D = A1 B2 - A2 B1:
//
//   u* = (a0 B2 - b0 A2) / D,   v* = (b0 A1 - a0 B1) / D,
//   w* = (k u* + l v*) / lambda.
//
// Throws SingularSystem when D = 0 and NonpositiveEquilibrium when any
// component fails to be strictly positive.
Equilibrium coexistence_equilibrium(const Params& p);

// u-extinction state (0, v, w):
//
//   v = b0 / (b2 + b4|O|),   w = l v / lambda.
//
// Throws SingularSystem when b2 + b4|O| = 0 and NonpositiveEquilibrium when
// v <= 0.
Equilibrium semitrivial_equilibrium(const Params& p);

// Largest relative residual of the three homogeneous balance laws
//
//   u (a0 - a1 u - a2 v - (a3 u + a4 v)|O|) = 0
//   v (b0 - b1 u - b2 v - (b3 u + b4 v)|O|) = 0
//   k u + l v - lambda w = 0
//
// at the given state.  Each residual is scaled by the largest term entering
// it, so a genuine equilibrium evaluates to roundoff.
double equilibrium_residual(const Params& p, const Equilibrium& e);

}  // namespace chemolv

#pragma once

#include <string>
#include <vector>

namespace chemolv {

// Coefficients of the two-species chemotaxis-competition system
//
//   u_t = d1 Lap u - chi1 div(u grad w) + u (a0 - a1 u - a2 v - a3 I[u] - a4 I[v])
//   v_t = d2 Lap v - chi2 div(v grad w) + v (b0 - b1 u - b2 v - b3 I[u] - b4 I[v])
//   w_t = d3 Lap w - lambda w + k u + l v
//
// on a bounded domain with no-flux boundaries, where I[f] is the integral of
// f over the whole domain.  Diffusion, sensitivity, local kinetic and signal
// coefficients are strictly positive; the nonlocal coefficients a3, a4, b3,
// b4 carry either sign (negative values model global cooperation).
struct Params {
  double d1 = 1.0, d2 = 1.0, d3 = 1.0;   // diffusion rates of u, v, w
  double chi1 = 1.0, chi2 = 1.0;         // chemotactic sensitivities
  double a0 = 1.0, a1 = 1.0, a2 = 1.0;   // u growth, self-limitation, cross-competition
  double a3 = 0.0, a4 = 0.0;             // u nonlocal coefficients
  double b0 = 1.0, b1 = 1.0, b2 = 1.0;   // v kinetics
  double b3 = 0.0, b4 = 0.0;             // v nonlocal coefficients
  double lambda = 1.0;                   // signal decay
  double k = 1.0, l = 1.0;               // signal production by u and v
  double omega_measure = 1.0;            // measure of the spatial domain

  bool operator==(const Params&) const = default;
};

// One "field: problem" line per violated constraint; empty means valid.
// Positivity is required of every coefficient except a3, a4, b3, b4, and
// every value must be finite.
std::vector<std::string> validate(const Params& p);

// Positive and negative part of a real number: a = pos - neg, both >= 0.
struct SignedParts {
  double pos = 0.0;
  double neg = 0.0;
};

SignedParts signed_parts(double a);

}  // namespace chemolv

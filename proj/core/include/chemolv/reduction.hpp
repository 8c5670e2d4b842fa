#pragma once

#include "chemolv/params.hpp"

namespace chemolv {

// Specializes the coefficient set to the classical Tello-Winkler two-species
// competition model
//
//   u_t = d1 Lap u - chi1 div(u grad w) + mu1 u (1 - u - abar1 v)
//   v_t = d2 Lap v - chi2 div(v grad w) + mu2 v (1 - abar2 u - v)
//
// by substituting a0 = a1 = mu1, a2 = mu1 abar1, b0 = b2 = mu2,
// b1 = mu2 abar2 and zeroing all nonlocal coefficients.  Diffusion,
// sensitivity and signal fields of `base` are preserved.  All four inputs
// must be strictly positive; throws InvalidArgument otherwise.
Params reduce_tello_winkler(const Params& base, double mu1, double mu2,
                            double abar1, double abar2);

}  // namespace chemolv

#pragma once

#include "chemolv/params.hpp"

namespace chemolv {

// Competition regimes, classified by the three ratios
//
//   r_low  = (b1 + b3|O|) / (a1 + a3|O|)
//   r_mid  =  b0 / a0
//   r_high = (b2 + b4|O|) / (a2 + a4|O|)
//
// Weak:               r_low < r_mid < r_high
// StronglyAsymmetric: r_low < r_high <= r_mid   (v outcompetes u)
// FullStrong:         r_low > r_mid > r_high
// Unclassified:       anything else, including nonpositive denominators.
enum class Regime { Weak, StronglyAsymmetric, FullStrong, Unclassified };

const char* to_string(Regime r);

struct RegimeClass {
  Regime regime = Regime::Unclassified;
  double r_low = 0.0;
  double r_mid = 0.0;
  double r_high = 0.0;
};

RegimeClass classify_regime(const Params& p);

}  // namespace chemolv

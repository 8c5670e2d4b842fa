#include "chemolv/regime.hpp"

namespace chemolv {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Weak:
      return "weak";
    case Regime::StronglyAsymmetric:
      return "strongly_asymmetric";
    case Regime::FullStrong:
      return "full_strong";
    case Regime::Unclassified:
      return "unclassified";
  }
  return "unclassified";
}

RegimeClass classify_regime(const Params& p) {
  const double den_low = p.a1 + p.a3 * p.omega_measure;
  const double den_high = p.a2 + p.a4 * p.omega_measure;

  RegimeClass rc;
  rc.r_low = (p.b1 + p.b3 * p.omega_measure) / den_low;
  rc.r_mid = p.b0 / p.a0;
  rc.r_high = (p.b2 + p.b4 * p.omega_measure) / den_high;

  // Ratios with nonpositive denominators do not order the competition
  // strengths, so such parameter sets stay unclassified.
  if (den_low <= 0.0 || den_high <= 0.0) {
    rc.regime = Regime::Unclassified;
    return rc;
  }

  if (rc.r_low < rc.r_mid && rc.r_mid < rc.r_high) {
    rc.regime = Regime::Weak;
  } else if (rc.r_low < rc.r_high && rc.r_high <= rc.r_mid) {
    rc.regime = Regime::StronglyAsymmetric;
  } else if (rc.r_low > rc.r_mid && rc.r_mid > rc.r_high) {
    rc.regime = Regime::FullStrong;
  } else {
    rc.regime = Regime::Unclassified;
  }
  return rc;
}

}  // namespace chemolv

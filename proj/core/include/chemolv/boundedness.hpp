#pragma once

#include "chemolv/params.hpp"
#include "chemolv/report.hpp"

namespace chemolv {

// Sufficient conditions for global boundedness of solutions, reported as one
// ConditionRecord per inequality.
//
// In any dimension ("local_dominance"):
//
//   min{a1, b2} > max{(a3)-, (b4)-, (a4)-, (b3)-} |O|
//
// In dimension >= 3 two further conditions are evaluated for an
// integrability exponent p > dim with smoothing constant C_p > 0
// ("u_crowding", "v_crowding"):
//
//   a1 > (p-1) chi1 + p [(a3)- + (a4)-] |O|^(1/p)
//          + [(a3)- + (b3)-] |O|^p + (2k)^(p+1) (chi1 + chi2) C_p
//   b2 > (p-1) chi2 + p [(b4)- + (b3)-] |O|^(1/p)
//          + [(a4)- + (b4)-] |O|^p + (2l)^(p+1) (chi1 + chi2) C_p
//
// p_exp and c_p are ignored for dim <= 2.  Throws InvalidExponent when
// dim >= 3 and p_exp <= dim, InvalidArgument when dim < 1 or a required
// C_p is not positive.
HypothesisReport check_boundedness(const Params& p, int dim, double p_exp, double c_p);

// Constants of the total-mass estimate implied by local_dominance:
//
//   C3 = max{(a3)-, (b4)-, ((a4)- + (b3)-)/2}
//   C4 = min{a1, b2}/|O| - C3
//
// When C4 > 0, the combined mass of u and v never exceeds
// max{ I[u0 + v0], max{a0, b0}/C4 }.
struct MassBound {
  double c3 = 0.0;
  double c4 = 0.0;
  bool applicable = false;     // C4 > 0
  double reaction_cap = 0.0;   // max{a0, b0} / C4 when applicable
};

MassBound mass_bound_constants(const Params& p);

}  // namespace chemolv

#include "chemolv/reduction.hpp"

#include "chemolv/errors.hpp"

namespace chemolv {

Params reduce_tello_winkler(const Params& base, double mu1, double mu2,
                            double abar1, double abar2) {
  if (!(mu1 > 0.0) || !(mu2 > 0.0) || !(abar1 > 0.0) || !(abar2 > 0.0)) {
    throw InvalidArgument("reduce_tello_winkler: rates and competition strengths must be positive");
  }

  Params p = base;
  p.a0 = mu1;
  p.a1 = mu1;
  p.a2 = mu1 * abar1;
  p.b0 = mu2;
  p.b1 = mu2 * abar2;
  p.b2 = mu2;
  p.a3 = p.a4 = p.b3 = p.b4 = 0.0;
  return p;
}

}  // namespace chemolv

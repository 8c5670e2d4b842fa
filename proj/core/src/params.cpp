#include "chemolv/params.hpp"

#include <cmath>

namespace chemolv {

namespace {

void require_positive(std::vector<std::string>& out, const char* name, double value) {
  if (!std::isfinite(value)) {
    out.push_back(std::string(name) + ": must be finite");
  } else if (value <= 0.0) {
    out.push_back(std::string(name) + ": must be positive");
  }
}

void require_finite(std::vector<std::string>& out, const char* name, double value) {
  if (!std::isfinite(value)) {
    out.push_back(std::string(name) + ": must be finite");
  }
}

}  // namespace

std::vector<std::string> validate(const Params& p) {
  std::vector<std::string> problems;
  require_positive(problems, "d1", p.d1);
  require_positive(problems, "d2", p.d2);
  require_positive(problems, "d3", p.d3);
  require_positive(problems, "chi1", p.chi1);
  require_positive(problems, "chi2", p.chi2);
  require_positive(problems, "a0", p.a0);
  require_positive(problems, "a1", p.a1);
  require_positive(problems, "a2", p.a2);
  require_finite(problems, "a3", p.a3);
  require_finite(problems, "a4", p.a4);
  require_positive(problems, "b0", p.b0);
  require_positive(problems, "b1", p.b1);
  require_positive(problems, "b2", p.b2);
  require_finite(problems, "b3", p.b3);
  require_finite(problems, "b4", p.b4);
  require_positive(problems, "lambda", p.lambda);
  require_positive(problems, "k", p.k);
  require_positive(problems, "l", p.l);
  require_positive(problems, "omega_measure", p.omega_measure);
  return problems;
}

SignedParts signed_parts(double a) {
  // (a)+ - (a)- = a and both parts are nonnegative; zero maps to (0, 0).
  SignedParts s;
  if (a > 0.0) {
    s.pos = a;
  } else if (a < 0.0) {
    s.neg = -a;
  }
  return s;
}

}  // namespace chemolv

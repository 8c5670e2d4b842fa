#include "chemolv/boundedness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chemolv/errors.hpp"

namespace chemolv {

void HypothesisReport::add(std::string id, double lhs, double rhs) {
  ConditionRecord c;
  c.id = std::move(id);
  c.lhs = lhs;
  c.rhs = rhs;
  c.margin = lhs - rhs;
  c.satisfied = c.margin > 0.0;
  overall = overall && c.satisfied;
  conditions.push_back(std::move(c));
}

const ConditionRecord* HypothesisReport::find(const std::string& id) const {
  for (const auto& c : conditions) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

HypothesisReport check_boundedness(const Params& p, int dim, double p_exp, double c_p) {
  if (dim < 1) {
    throw InvalidArgument("check_boundedness: dim must be at least 1");
  }

  const double o = p.omega_measure;
  const double a3n = signed_parts(p.a3).neg;
  const double a4n = signed_parts(p.a4).neg;
  const double b3n = signed_parts(p.b3).neg;
  const double b4n = signed_parts(p.b4).neg;

  HypothesisReport report;
  report.add("local_dominance", std::min(p.a1, p.b2),
             std::max({a3n, b4n, a4n, b3n}) * o);

  if (dim >= 3) {
    if (!(p_exp > static_cast<double>(dim))) {
      throw InvalidExponent("check_boundedness: p_exp must exceed the dimension");
    }
    if (!(c_p > 0.0)) {
      throw InvalidArgument("check_boundedness: C_p must be positive");
    }

    const double o_root = std::pow(o, 1.0 / p_exp);
    const double o_pow = std::pow(o, p_exp);
    const double chi_sum = p.chi1 + p.chi2;

    report.add("u_crowding", p.a1,
               (p_exp - 1.0) * p.chi1 + p_exp * (a3n + a4n) * o_root +
                   (a3n + b3n) * o_pow +
                   std::pow(2.0 * p.k, p_exp + 1.0) * chi_sum * c_p);
    report.add("v_crowding", p.b2,
               (p_exp - 1.0) * p.chi2 + p_exp * (b4n + b3n) * o_root +
                   (a4n + b4n) * o_pow +
                   std::pow(2.0 * p.l, p_exp + 1.0) * chi_sum * c_p);
  }
  return report;
}

MassBound mass_bound_constants(const Params& p) {
  const double a3n = signed_parts(p.a3).neg;
  const double a4n = signed_parts(p.a4).neg;
  const double b3n = signed_parts(p.b3).neg;
  const double b4n = signed_parts(p.b4).neg;

  MassBound mb;
  mb.c3 = std::max({a3n, b4n, 0.5 * (a4n + b3n)});
  mb.c4 = std::min(p.a1, p.b2) / p.omega_measure - mb.c3;
  mb.applicable = mb.c4 > 0.0;
  mb.reaction_cap = mb.applicable ? std::max(p.a0, p.b0) / mb.c4 : 0.0;
  return mb;
}

}  // namespace chemolv

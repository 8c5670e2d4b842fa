#include "chemolv/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "chemolv/errors.hpp"
#include "chemolv/stencils.hpp"

namespace chemolv {

namespace {

// I[s - s0 - s0 log(s/s0)], the Boltzmann-type distance of a positive field
// to a positive level s0.  Zero exactly at s == s0 cellwise.
double entropy_distance(const Field& f, double level, const char* name) {
  double sum = 0.0;
  for (double s : f.values) {
    if (!(s > 0.0)) {
      throw NonpositiveDensity(std::string("lyapunov: ") + name +
                               " is not strictly positive");
    }
    sum += s - level - level * std::log(s / level);
  }
  return sum * f.grid.cell_volume();
}

double l2_distance_sq(const Field& f, double level) {
  double sum = 0.0;
  for (double s : f.values) {
    const double d = s - level;
    sum += d * d;
  }
  return sum * f.grid.cell_volume();
}

double linf_distance(const Field& f, double level) {
  double m = 0.0;
  for (double s : f.values) m = std::max(m, std::abs(s - level));
  return m;
}

}  // namespace

LyapunovValue lyapunov_weak(const SimState& s, const Params& p,
                            const Equilibrium& coexistence, double delta) {
  if (coexistence.kind != EquilibriumKind::Coexistence) {
    throw InvalidArgument("lyapunov_weak: needs the coexistence state");
  }
  if (!(delta > 0.0)) {
    throw InvalidArgument("lyapunov_weak: delta must be positive");
  }

  LyapunovValue out;
  out.E = entropy_distance(s.u, coexistence.u, "u") +
          (p.a2 / p.b1) * entropy_distance(s.v, coexistence.v, "v") +
          0.5 * delta * l2_distance_sq(s.w, coexistence.w);
  out.F = l2_distance_sq(s.u, coexistence.u) +
          l2_distance_sq(s.v, coexistence.v) +
          l2_distance_sq(s.w, coexistence.w);
  return out;
}

LyapunovValue lyapunov_asym(const SimState& s, const Params& p,
                            const Equilibrium& semitrivial, double delta2) {
  if (semitrivial.kind != EquilibriumKind::SemiTrivial) {
    throw InvalidArgument("lyapunov_asym: needs the u-extinction state");
  }
  if (!(delta2 > 0.0)) {
    throw InvalidArgument("lyapunov_asym: delta2 must be positive");
  }
  if (min_value(s.u) < 0.0) {
    throw NonpositiveDensity("lyapunov_asym: u has negative cells");
  }

  LyapunovValue out;
  out.E = integrate(s.u) +
          (p.a2 / p.b1) * entropy_distance(s.v, semitrivial.v, "v") +
          0.5 * delta2 * l2_distance_sq(s.w, semitrivial.w);
  out.F = l2_distance_sq(s.u, 0.0) +
          l2_distance_sq(s.v, semitrivial.v) +
          l2_distance_sq(s.w, semitrivial.w);
  return out;
}

DecayVerdict check_decay(const std::vector<DiagRecord>& series) {
  std::vector<const DiagRecord*> rows;
  rows.reserve(series.size());
  for (const auto& r : series) {
    if (!std::isnan(r.E)) rows.push_back(&r);
  }
  if (rows.size() < 3) {
    throw InsufficientData("check_decay: needs at least 3 records with Lyapunov data");
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i]->t > rows[i - 1]->t)) {
      throw InsufficientData("check_decay: time must be strictly increasing");
    }
  }

  const double tol_e = 1e-8 * std::max(1.0, rows.front()->E);

  DecayVerdict verdict;
  double eps = std::numeric_limits<double>::infinity();
  bool have_eps = false;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const DiagRecord& a = *rows[i];
    const DiagRecord& b = *rows[i + 1];
    if (b.E - a.E > tol_e) ++verdict.violations;
    if (a.F > 1e-12) {
      eps = std::min(eps, (a.E - b.E) / ((b.t - a.t) * a.F));
      have_eps = true;
    }
  }
  verdict.monotone = verdict.violations == 0;
  if (have_eps) verdict.epsilon_hat = eps;
  return verdict;
}

bool detect_convergence(const SimState& s, const Equilibrium& ref, double tol) {
  const double dist = std::max({linf_distance(s.u, ref.u),
                                linf_distance(s.v, ref.v),
                                linf_distance(s.w, ref.w)});
  return dist < tol;
}

DiagRecord make_diag_record(const SimState& s, const Params& p,
                            const Equilibrium* ref, double delta) {
  DiagRecord r;
  r.t = s.t;
  r.mass_u = integrate(s.u);
  r.mass_v = integrate(s.v);
  r.linf_u = linf_norm(s.u);
  r.linf_v = linf_norm(s.v);
  r.linf_w = linf_norm(s.w);
  r.grad_w_sq = grad_sq_integral(s.w);

  if (ref == nullptr) return r;

  r.l2_dist_u = l2_distance_sq(s.u, ref->u);
  r.l2_dist_v = l2_distance_sq(s.v, ref->v);
  r.l2_dist_w = l2_distance_sq(s.w, ref->w);
  try {
    const LyapunovValue lv = ref->kind == EquilibriumKind::Coexistence
                                 ? lyapunov_weak(s, p, *ref, delta)
                                 : lyapunov_asym(s, p, *ref, delta);
    r.E = lv.E;
    r.F = lv.F;
  } catch (const NonpositiveDensity&) {
    // Leave E and F at NaN: the trajectory left the domain of the
    // logarithmic terms, which the trend analysis skips.
  }
  return r;
}

TrajectoryRecorder::TrajectoryRecorder(const Params& p) : params_(p) {}

TrajectoryRecorder::TrajectoryRecorder(const Params& p, const Equilibrium& ref,
                                       double delta, double convergence_tol)
    : params_(p), ref_(ref), delta_(delta), tol_(convergence_tol) {}

void TrajectoryRecorder::record(const SimState& s) {
  records_.push_back(
      make_diag_record(s, params_, ref_ ? &*ref_ : nullptr, delta_));
}

bool TrajectoryRecorder::converged(const SimState& s) const {
  if (!ref_ || !(tol_ > 0.0)) return false;
  return detect_convergence(s, *ref_, tol_);
}

}  // namespace chemolv

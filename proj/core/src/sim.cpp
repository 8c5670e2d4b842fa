#include "chemolv/sim.hpp"

#include <algorithm>
#include <cmath>

#include "chemolv/errors.hpp"
#include "chemolv/helmholtz.hpp"
#include "chemolv/stencils.hpp"

namespace chemolv {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Converged:
      return "converged";
    case Outcome::ReachedTEnd:
      return "reached_t_end";
    case Outcome::BlowUp:
      return "blow_up";
    case Outcome::StepUnderflow:
      return "step_underflow";
  }
  return "reached_t_end";
}

ReactionRates reaction_rhs(const SimState& s, const Params& p) {
  const double iu = integrate(s.u);
  const double iv = integrate(s.v);
  const double nonlocal_u = p.a3 * iu + p.a4 * iv;
  const double nonlocal_v = p.b3 * iu + p.b4 * iv;

  ReactionRates r{make_field(s.u.grid), make_field(s.v.grid)};
  for (std::size_t i = 0; i < s.u.values.size(); ++i) {
    const double u = s.u.values[i];
    const double v = s.v.values[i];
    r.u_rate.values[i] = u * (p.a0 - p.a1 * u - p.a2 * v - nonlocal_u);
    r.v_rate.values[i] = v * (p.b0 - p.b1 * u - p.b2 * v - nonlocal_v);
  }
  return r;
}

namespace {

bool exceeds_guard(const Field& f, double threshold) {
  for (double v : f.values) {
    if (!std::isfinite(v) || std::abs(v) > threshold) return true;
  }
  return false;
}

}  // namespace

StepStatus try_step(const SimState& in, const Params& p, double dt,
                    double blowup_threshold, SimState& out) {
  const ReactionRates rates = reaction_rhs(in, p);

  Field u_star = in.u;
  Field v_star = in.v;
  Field w_star = in.w;

  if (p.chi1 != 0.0) {
    const Field div_u = chemo_divergence(in.u, in.w);
    for (std::size_t i = 0; i < u_star.values.size(); ++i) {
      u_star.values[i] += dt * (-p.chi1 * div_u.values[i] + rates.u_rate.values[i]);
    }
  } else {
    for (std::size_t i = 0; i < u_star.values.size(); ++i) {
      u_star.values[i] += dt * rates.u_rate.values[i];
    }
  }
  if (p.chi2 != 0.0) {
    const Field div_v = chemo_divergence(in.v, in.w);
    for (std::size_t i = 0; i < v_star.values.size(); ++i) {
      v_star.values[i] += dt * (-p.chi2 * div_v.values[i] + rates.v_rate.values[i]);
    }
  } else {
    for (std::size_t i = 0; i < v_star.values.size(); ++i) {
      v_star.values[i] += dt * rates.v_rate.values[i];
    }
  }
  for (std::size_t i = 0; i < w_star.values.size(); ++i) {
    w_star.values[i] += dt * (p.k * in.u.values[i] + p.l * in.v.values[i]);
  }

  // A wildly overshooting explicit stage can overflow before the implicit
  // solve; catch it here so the caller sees BlowUp, not NaN.
  if (exceeds_guard(u_star, blowup_threshold) || exceeds_guard(v_star, blowup_threshold) ||
      exceeds_guard(w_star, blowup_threshold)) {
    return StepStatus::BlowUp;
  }

  SimState next;
  next.t = in.t + dt;
  try {
    next.u = implicit_helmholtz_solve(u_star, p.d1, 0.0, dt);
    next.v = implicit_helmholtz_solve(v_star, p.d2, 0.0, dt);
    next.w = implicit_helmholtz_solve(w_star, p.d3, p.lambda, dt);
  } catch (const SolverDiverged&) {
    return StepStatus::SolverDiverged;
  }

  if (exceeds_guard(next.u, blowup_threshold) || exceeds_guard(next.v, blowup_threshold) ||
      exceeds_guard(next.w, blowup_threshold)) {
    return StepStatus::BlowUp;
  }
  if (min_value(next.u) < -kNegativityTol || min_value(next.v) < -kNegativityTol) {
    return StepStatus::NegativityBreach;
  }

  out = std::move(next);
  return StepStatus::Ok;
}

SimState step(const SimState& s, const Params& p, double dt) {
  SimState out;
  switch (try_step(s, p, dt, 1e8, out)) {
    case StepStatus::Ok:
      return out;
    case StepStatus::NegativityBreach:
      throw NegativityBreach("step: density dropped below the negativity tolerance");
    case StepStatus::SolverDiverged:
      throw SolverDiverged("step: implicit solve failed");
    case StepStatus::BlowUp:
      throw BlowUpGuard("step: field magnitude crossed the blow-up threshold");
  }
  return out;
}

namespace {

// Largest centered face difference of w, an estimate of |grad w| for the
// transport time-step cap.
double max_gradient(const Field& w) {
  const Grid& g = w.grid;
  double m = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i + 1 < g.nx; ++i) {
      m = std::max(m, std::abs(w.at(i + 1, j) - w.at(i, j)) / g.hx);
    }
  }
  if (g.dim == 2) {
    for (int j = 0; j + 1 < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        m = std::max(m, std::abs(w.at(i, j + 1) - w.at(i, j)) / g.hy);
      }
    }
  }
  return m;
}

}  // namespace

RunResult run(SimState initial, const Params& p, const SimConfig& cfg,
              DiagnosticSink* sink) {
  if (!(cfg.dt_min < cfg.dt_init) || !(cfg.dt_init <= cfg.t_end)) {
    throw InvalidArgument("run: needs dt_min < dt_init <= t_end");
  }
  if (!(cfg.safety > 0.0) || !(cfg.safety <= 1.0)) {
    throw InvalidArgument("run: safety factor must lie in (0, 1]");
  }
  if (cfg.record_every < 1) {
    throw InvalidArgument("run: record_every must be at least 1");
  }

  double dt = cfg.dt_init;
  const double chi_max = std::max(p.chi1, p.chi2);
  if (chi_max > 0.0) {
    const double h = initial.u.grid.dim == 1
                         ? initial.u.grid.hx
                         : std::min(initial.u.grid.hx, initial.u.grid.hy);
    dt = std::min(dt, 0.1 * h / (chi_max * (1.0 + max_gradient(initial.w))));
  }
  dt = std::max(dt, cfg.dt_min);

  RunResult result;
  result.state = std::move(initial);

  if (sink) {
    sink->record(result.state);
    if (sink->converged(result.state)) {
      result.outcome = Outcome::Converged;
      return result;
    }
  }

  int clean_streak = 0;
  long long since_record = 0;
  SimState next;

  while (result.state.t < cfg.t_end) {
    const double remaining = cfg.t_end - result.state.t;
    const bool final_step = dt >= remaining;
    const double dt_try = final_step ? remaining : dt;

    const StepStatus status = try_step(result.state, p, dt_try, cfg.blowup_threshold, next);

    if (status == StepStatus::BlowUp) {
      if (sink && since_record != 0) sink->record(result.state);
      result.outcome = Outcome::BlowUp;
      return result;
    }
    if (status != StepStatus::Ok) {
      dt *= 0.5;
      clean_streak = 0;
      if (dt < cfg.dt_min) {
        if (sink && since_record != 0) sink->record(result.state);
        result.outcome = Outcome::StepUnderflow;
        return result;
      }
      continue;
    }

    result.state = std::move(next);
    if (final_step) result.state.t = cfg.t_end;
    ++result.steps;
    ++since_record;

    if (++clean_streak >= 10 && dt < cfg.dt_init) {
      dt = std::min(cfg.dt_init, dt / cfg.safety);
      clean_streak = 0;
    }

    if (since_record == cfg.record_every || result.state.t >= cfg.t_end) {
      since_record = 0;
      if (sink) {
        sink->record(result.state);
        if (sink->converged(result.state)) {
          result.outcome = Outcome::Converged;
          return result;
        }
      }
    }
  }

  result.outcome = Outcome::ReachedTEnd;
  return result;
}

}  // namespace chemolv

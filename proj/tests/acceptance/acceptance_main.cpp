// Acceptance gates for the laboratory, one line of output per criterion:
//
//    1  a self-limitation search certifies the symmetric weak scenario at
//       1.5 and the perturbed run converges to coexistence with monotone
//       energy decay inside a wall-clock budget
//    2  the certified asymmetric scenario drives u extinct and v to its
//       carrying level with monotone energy decay
//    3  total mass in both trajectories stays under 1.05 times the
//       independently recomputed reaction cap
//    4  equilibria solve the spatially flat kinetic system to round-off
//       across random parameter draws in both regimes
//    5  the crowding thresholds collapse to the reduced closed form when
//       nonlocal terms vanish
//    6  the leading-minor test agrees with a trigonometric eigenvalue
//       oracle, and granted certificates are positive definite under it
//    7  the spatial operators converge at second order and the quadrature
//       is exact on constants
//    8  transport without kinetics conserves both masses over ten thousand
//       steps
//    9  spatially flat equilibria are fixed points of the scheme
//   10  cooperative runaway ends in a finite-time blow-up flag with finite
//       reported fields
//
// The process exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "chemolv/boundedness.hpp"
#include "chemolv/diagnostics.hpp"
#include "chemolv/equilibrium.hpp"
#include "chemolv/errors.hpp"
#include "chemolv/matrix.hpp"
#include "chemolv/presets.hpp"
#include "chemolv/regime.hpp"
#include "chemolv/runner.hpp"
#include "chemolv/scenario.hpp"
#include "chemolv/sim.hpp"
#include "chemolv/stability.hpp"
#include "chemolv/stencils.hpp"

#include "../oracles.hpp"

using namespace chemolv;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

// Trajectories kept for the mass-cap criterion.
struct Trajectory {
  Params params;
  std::vector<DiagRecord> series;
  bool valid = false;
};

Trajectory g_weak_run;
Trajectory g_asym_run;

Params search_params(double alpha) {
  Params p;
  p.chi1 = p.chi2 = 0.5;
  p.a1 = p.b2 = alpha;
  p.a3 = p.a4 = p.b3 = p.b4 = 0.1;
  return p;
}

std::vector<DiagRecord> drop_transient(const std::vector<DiagRecord>& s) {
  const std::size_t drop = s.size() / 20;
  return {s.begin() + static_cast<long>(drop), s.end()};
}

double sup_dist(const Field& f, double level) {
  double d = 0.0;
  for (double x : f.values) d = std::max(d, std::abs(x - level));
  return d;
}

bool all_finite(const SimState& s) {
  for (const Field* f : {&s.u, &s.v, &s.w}) {
    for (double x : f->values) {
      if (!std::isfinite(x)) return false;
    }
  }
  return true;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// --- 1 -------------------------------------------------------------------

void weak_search_and_convergence(Criterion& c) {
  double found = 0.0;
  StabilityResult cert;
  for (double alpha = 1.0; alpha <= 10.0 + 1e-9; alpha += 0.5) {
    try {
      StabilityResult res = check_stability(search_params(alpha), StabilityCase::Weak);
      if (res.report.overall) {
        found = alpha;
        cert = std::move(res);
        break;
      }
    } catch (const RegimeMismatch&) {
    }
  }
  c.require(found == 1.5, "search stops at self-limitation 1.5, got " + fmt(found));
  if (found == 0.0) return;
  c.require(cert.certificate.has_value(), "passing check carries a certificate");
  if (!cert.certificate) return;

  const Params p = search_params(found);
  const Equilibrium eq = coexistence_equilibrium(p);
  const Grid g = make_grid_1d(128, 1.0);
  SimState s0;
  s0.u = make_field(g);
  s0.v = make_field(g);
  s0.w = make_field(g);
  for (int i = 0; i < g.nx; ++i) {
    const double bump = 1.0 + 0.1 * std::cos(kPi * g.center_x(i) / g.Lx);
    s0.u[i] = eq.u * bump;
    s0.v[i] = eq.v * bump;
    s0.w[i] = eq.w * bump;
  }

  SimConfig cfg;
  cfg.dt_init = 5e-3;
  cfg.t_end = 100.0;
  cfg.record_every = 25;

  TrajectoryRecorder rec(p, eq, cert.certificate->delta_chosen, 1e-6);
  const auto t0 = std::chrono::steady_clock::now();
  const RunResult run = chemolv::run(s0, p, cfg, &rec);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  c.require(run.outcome == Outcome::Converged,
            std::string("outcome is converged, got ") + to_string(run.outcome));
  c.require(sup_dist(run.state.u, eq.u) < 1e-3, "u within 1e-3 of coexistence");
  c.require(sup_dist(run.state.v, eq.v) < 1e-3, "v within 1e-3 of coexistence");
  c.require(sup_dist(run.state.w, eq.w) < 1e-3, "w within 1e-3 of coexistence");

  try {
    const DecayVerdict v = check_decay(drop_transient(rec.records()));
    c.require(v.violations == 0, "no decay violations, got " + std::to_string(v.violations));
    c.require(v.monotone, "energy decays monotonically");
    c.require(v.epsilon_hat.has_value() && *v.epsilon_hat > 0.0,
              "positive decay-rate estimate");
  } catch (const Error& e) {
    c.require(false, std::string("decay analysis failed: ") + e.what());
  }
  c.require(secs < 60.0, "run finishes inside 60 s, took " + fmt(secs));

  g_weak_run.params = p;
  g_weak_run.series = rec.records();
  g_weak_run.valid = true;
}

// --- 2 -------------------------------------------------------------------

void asym_extinction(Criterion& c) {
  const Scenario sc = preset_scenario("asym-a1");
  const ScenarioRun run = run_scenario(sc, true, 1);

  c.require(run.exit_code == 0, "exit code 0, got " + std::to_string(run.exit_code));
  c.require(run.outcome.has_value() && *run.outcome == Outcome::Converged,
            "outcome is converged");
  c.require(run.series.size() >= 3, "series long enough to analyze");
  if (run.series.size() < 3 || !run.final_state || !run.semitrivial) {
    c.require(false, "missing simulation artifacts");
    return;
  }

  const double m0 = run.series.front().mass_u;
  const double mT = run.series.back().mass_u;
  c.require(mT < 1e-4 * m0,
            "u mass decays below 1e-4 of its start, got " + fmt(mT / m0));
  c.require(sup_dist(run.final_state->v, run.semitrivial->v) < 1e-3,
            "v within 1e-3 of its carrying level");

  try {
    const DecayVerdict v = check_decay(drop_transient(run.series));
    c.require(v.monotone && v.violations == 0, "energy decays monotonically");
  } catch (const Error& e) {
    c.require(false, std::string("decay analysis failed: ") + e.what());
  }

  g_asym_run.params = sc.params;
  g_asym_run.series = run.series;
  g_asym_run.valid = true;
}

// --- 3 -------------------------------------------------------------------

void mass_under_cap(Criterion& c) {
  for (const Trajectory* traj : {&g_weak_run, &g_asym_run}) {
    if (!traj->valid) {
      c.require(false, "trajectory from an earlier criterion is missing");
      continue;
    }
    const Params& p = traj->params;
    const auto neg = [](double x) { return x < 0.0 ? -x : 0.0; };
    const double c3 = std::max({neg(p.a3), neg(p.b4), 0.5 * (neg(p.a4) + neg(p.b3))});
    const double c4 = std::min(p.a1, p.b2) / p.omega_measure - c3;
    c.require(c4 > 0.0, "mass cap applies");
    if (!(c4 > 0.0)) continue;

    const double m0 = traj->series.front().mass_u + traj->series.front().mass_v;
    const double cap = std::max(m0, std::max(p.a0, p.b0) / c4);
    double worst = 0.0;
    for (const DiagRecord& r : traj->series) {
      worst = std::max(worst, r.mass_u + r.mass_v);
    }
    c.require(worst <= 1.05 * cap,
              "mass stays under 1.05 cap, got " + fmt(worst) + " vs cap " + fmt(cap));
  }
}

// --- 4 -------------------------------------------------------------------

void equilibrium_residuals(Criterion& c) {
  std::mt19937_64 rng(101);
  const auto draw = [&rng]() {
    Params p;
    p.a0 = oracle::uniform(rng, 0.5, 2.0);
    p.b0 = oracle::uniform(rng, 0.5, 2.0);
    p.a1 = oracle::uniform(rng, 0.5, 3.0);
    p.b2 = oracle::uniform(rng, 0.5, 3.0);
    p.a2 = oracle::uniform(rng, 0.1, 1.5);
    p.b1 = oracle::uniform(rng, 0.1, 1.5);
    p.a3 = oracle::uniform(rng, -0.2, 0.4);
    p.a4 = oracle::uniform(rng, -0.2, 0.4);
    p.b3 = oracle::uniform(rng, -0.2, 0.4);
    p.b4 = oracle::uniform(rng, -0.2, 0.4);
    p.k = oracle::uniform(rng, 0.5, 2.0);
    p.l = oracle::uniform(rng, 0.5, 2.0);
    p.lambda = oracle::uniform(rng, 0.5, 2.0);
    p.omega_measure = oracle::uniform(rng, 0.5, 2.0);
    return p;
  };

  int weak_done = 0;
  double weak_worst = 0.0;
  long attempts = 0;
  while (weak_done < 1000 && ++attempts < 400000) {
    const Params p = draw();
    if (classify_regime(p).regime != Regime::Weak) continue;
    Equilibrium e;
    try {
      e = coexistence_equilibrium(p);
    } catch (const Error&) {
      continue;
    }
    if (e.u > 50.0 || e.v > 50.0) continue;  // keep the draw scale bounded
    weak_worst = std::max(weak_worst, equilibrium_residual(p, e));
    ++weak_done;
  }
  c.require(weak_done == 1000, "1000 coexistence draws found");
  c.require(weak_worst < 1e-12,
            "coexistence residual under 1e-12, worst " + fmt(weak_worst));

  int asym_done = 0;
  double asym_worst = 0.0;
  attempts = 0;
  while (asym_done < 1000 && ++attempts < 400000) {
    Params p = draw();
    p.b0 = oracle::uniform(rng, 2.0, 5.0);  // favor the asymmetric ordering
    if (classify_regime(p).regime != Regime::StronglyAsymmetric) continue;
    Equilibrium e;
    try {
      e = semitrivial_equilibrium(p);
    } catch (const Error&) {
      continue;
    }
    asym_worst = std::max(asym_worst, equilibrium_residual(p, e));
    ++asym_done;
  }
  c.require(asym_done == 1000, "1000 u-extinction draws found");
  c.require(asym_worst < 1e-12,
            "u-extinction residual under 1e-12, worst " + fmt(asym_worst));
}

// --- 5 -------------------------------------------------------------------

void reduced_crowding_form(Criterion& c) {
  std::mt19937_64 rng(102);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    Params p;
    p.chi1 = oracle::uniform(rng, 0.01, 2.0);
    p.chi2 = oracle::uniform(rng, 0.01, 2.0);
    p.a1 = oracle::uniform(rng, 0.1, 5.0);
    p.b2 = oracle::uniform(rng, 0.1, 5.0);
    p.k = oracle::uniform(rng, 0.1, 3.0);
    p.l = oracle::uniform(rng, 0.1, 3.0);
    p.omega_measure = oracle::uniform(rng, 0.2, 4.0);
    const double p_exp = oracle::uniform(rng, 3.1, 6.0);
    const double c_p = oracle::uniform(rng, 0.001, 1.0);

    const HypothesisReport rep = check_boundedness(p, 3, p_exp, c_p);
    const ConditionRecord* u = rep.find("u_crowding");
    const ConditionRecord* v = rep.find("v_crowding");
    if (u == nullptr || v == nullptr) {
      c.require(false, "crowding rows present in dimension 3");
      return;
    }
    const double u_ref =
        oracle::reduced_crowding_rhs(p.chi1, p.chi1, p.chi2, p.k, p_exp, c_p);
    const double v_ref =
        oracle::reduced_crowding_rhs(p.chi2, p.chi1, p.chi2, p.l, p_exp, c_p);
    worst = std::max(worst, std::abs(u->rhs - u_ref) / std::max(1.0, std::abs(u_ref)));
    worst = std::max(worst, std::abs(v->rhs - v_ref) / std::max(1.0, std::abs(v_ref)));
  }
  c.require(worst < 1e-12, "reduced form matches to 1e-12, worst " + fmt(worst));
}

// --- 6 -------------------------------------------------------------------

void definiteness_oracle(Criterion& c) {
  std::mt19937_64 rng(103);
  int checked = 0;
  int disagreements = 0;
  while (checked < 1000) {
    SymMatrix m(3);
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) {
        const double x = oracle::uniform(rng, -2.0, 2.0);
        m(i, j) = x;
        m(j, i) = x;
      }
    }
    const auto eig = oracle::sym3_eigenvalues(m);
    const double scale = std::max({std::abs(eig[0]), std::abs(eig[2]), 1e-30});
    if (std::abs(eig[0]) < 1e-10 * scale) continue;
    if (is_positive_definite(m).positive_definite != (eig[0] > 0.0)) ++disagreements;
    ++checked;
  }
  c.require(disagreements == 0,
            "minor and eigenvalue verdicts agree on 1000 draws, " +
                std::to_string(disagreements) + " disagreements");

  int granted = 0;
  long attempts = 0;
  while (granted < 200 && ++attempts < 200000) {
    Params p;
    p.a0 = oracle::uniform(rng, 0.5, 2.0);
    p.b0 = oracle::uniform(rng, 0.5, 2.0);
    p.a1 = oracle::uniform(rng, 1.2, 6.0);
    p.b2 = oracle::uniform(rng, 1.2, 6.0);
    p.a2 = oracle::uniform(rng, 0.3, 1.2);
    p.b1 = oracle::uniform(rng, 0.3, 1.2);
    p.a3 = oracle::uniform(rng, 0.0, 0.3);
    p.a4 = oracle::uniform(rng, 0.0, 0.3);
    p.b3 = oracle::uniform(rng, 0.0, 0.3);
    p.b4 = oracle::uniform(rng, 0.0, 0.3);
    p.chi1 = oracle::uniform(rng, 0.05, 1.0);
    p.chi2 = oracle::uniform(rng, 0.05, 1.0);
    p.k = oracle::uniform(rng, 0.5, 2.0);
    p.l = oracle::uniform(rng, 0.5, 2.0);
    p.lambda = oracle::uniform(rng, 0.5, 2.0);

    StabilityResult res;
    try {
      res = check_stability(p, StabilityCase::Weak);
    } catch (const Error&) {
      continue;
    }
    if (!res.report.overall) continue;
    if (!res.certificate.has_value()) {
      c.require(false, "passing check grants a certificate");
      return;
    }
    const StabilityCertificate& cert = *res.certificate;
    c.require(cert.positive_definite, "granted certificate is positive definite");
    const auto pe = oracle::sym3_eigenvalues(cert.P);
    const auto se = oracle::sym3_eigenvalues(cert.S);
    c.require(pe[0] > 0.0, "P is positive definite under the eigenvalue oracle");
    c.require(se[0] > 0.0, "S is positive definite under the eigenvalue oracle");
    if (!c.ok) return;
    ++granted;
  }
  c.require(granted == 200, "200 granted certificates examined, got " +
                                std::to_string(granted));
}

// --- 7 -------------------------------------------------------------------

double laplacian_error(int n) {
  const Grid g = make_grid_1d(n, 1.5);
  Field f = make_field(g);
  for (int i = 0; i < n; ++i) f[i] = std::cos(kPi * g.center_x(i) / g.Lx);
  const Field lap = laplacian_neumann(f);
  const double factor = -(kPi / g.Lx) * (kPi / g.Lx);
  double err = 0.0;
  for (int i = 0; i < n; ++i) err = std::max(err, std::abs(lap[i] - factor * f[i]));
  return err;
}

double chemo_error(int n) {
  const Grid g = make_grid_1d(n, 1.5);
  const double q = kPi / g.Lx;
  Field u = make_field(g), w = make_field(g);
  for (int i = 0; i < n; ++i) {
    const double x = g.center_x(i);
    u[i] = 2.0 + std::sin(q * x);
    w[i] = std::cos(q * x);
  }
  const Field div = chemo_divergence(u, w);
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = g.center_x(i);
    const double exact = q * std::cos(q * x) * (-q * std::sin(q * x)) +
                         (2.0 + std::sin(q * x)) * (-q * q * std::cos(q * x));
    err = std::max(err, std::abs(div[i] - exact));
  }
  return err;
}

void discretization_order(Criterion& c) {
  const double lap_ratio = laplacian_error(24) / laplacian_error(48);
  c.require(lap_ratio > 3.5 && lap_ratio < 4.5,
            "diffusion stencil halves the error fourfold, ratio " + fmt(lap_ratio));
  const double div_ratio = chemo_error(24) / chemo_error(48);
  c.require(div_ratio > 3.5 && div_ratio < 4.5,
            "transport stencil halves the error fourfold, ratio " + fmt(div_ratio));

  for (const Grid& g :
       {make_grid_1d(37, 1.7), make_grid_2d(11, 23, 0.9, 2.3), make_grid_1d(256, 1.0)}) {
    const double c0 = 0.731243;
    const double exact = c0 * g.measure();
    const double got = integrate(make_field(g, c0));
    c.require(std::abs(got - exact) <= 1e-15 * std::abs(exact),
              "constant integration exact on " + std::to_string(g.nx) + "x" +
                  std::to_string(g.ny));
  }
}

// --- 8 -------------------------------------------------------------------

void transport_conserves_mass(Criterion& c) {
  Params p;
  p.a0 = p.a1 = p.a2 = 0.0;
  p.b0 = p.b1 = p.b2 = 0.0;
  p.k = p.l = 0.0;
  p.chi1 = p.chi2 = 0.5;

  const Grid g = make_grid_1d(64, 1.0);
  SimState s;
  s.u = make_field(g);
  s.v = make_field(g);
  s.w = make_field(g);
  for (int i = 0; i < g.nx; ++i) {
    const double x = g.center_x(i);
    s.u[i] = 1.0 + 0.5 * std::cos(kPi * x);
    s.v[i] = 2.0 + std::sin(kPi * x);
    s.w[i] = 0.5 + 0.25 * std::cos(2.0 * kPi * x);
  }
  const double mu0 = integrate(s.u);
  const double mv0 = integrate(s.v);

  for (int n = 0; n < 10000; ++n) s = step(s, p, 1e-4);

  const double du = std::abs(integrate(s.u) - mu0) / std::abs(mu0);
  const double dv = std::abs(integrate(s.v) - mv0) / std::abs(mv0);
  c.require(du < 1e-10, "u mass drift under 1e-10, got " + fmt(du));
  c.require(dv < 1e-10, "v mass drift under 1e-10, got " + fmt(dv));
}

// --- 9 -------------------------------------------------------------------

void flat_equilibrium_fixed_point(Criterion& c) {
  const Params p = search_params(1.5);
  const Equilibrium eq = coexistence_equilibrium(p);
  const Grid g = make_grid_1d(64, 1.0);

  SimState s;
  s.u = make_field(g, eq.u);
  s.v = make_field(g, eq.v);
  s.w = make_field(g, eq.w);
  for (int n = 0; n < 1000; ++n) s = step(s, p, 1e-3);

  const double dev = std::max({sup_dist(s.u, eq.u), sup_dist(s.v, eq.v),
                               sup_dist(s.w, eq.w)});
  c.require(dev < 1e-10, "state stays within 1e-10, got " + fmt(dev));
}

// --- 10 ------------------------------------------------------------------

void cooperative_blowup(Criterion& c) {
  const ScenarioRun run = run_scenario(preset_scenario("coop-blowup"), true, 1);
  c.require(run.outcome.has_value(), "simulation ran");
  if (!run.outcome) return;
  c.require(*run.outcome == Outcome::BlowUp || *run.outcome == Outcome::StepUnderflow,
            std::string("runaway flagged, outcome ") + to_string(*run.outcome));
  c.require(run.exit_code == exit_code::kBlowUp ||
                run.exit_code == exit_code::kStepUnderflow,
            "exit code marks the failure mode, got " + std::to_string(run.exit_code));
  c.require(run.final_state.has_value() && all_finite(*run.final_state),
            "reported fields are finite");
}

}  // namespace

int main() {
  struct Gate {
    const char* label;
    void (*fn)(Criterion&);
  };
  const Gate gates[] = {
      {"weak search certifies 1.5 and the run converges", weak_search_and_convergence},
      {"asymmetric run drives u extinct", asym_extinction},
      {"total mass stays under the reaction cap", mass_under_cap},
      {"equilibria solve the kinetics to round-off", equilibrium_residuals},
      {"crowding thresholds match the reduced form", reduced_crowding_form},
      {"definiteness agrees with the eigenvalue oracle", definiteness_oracle},
      {"operators are second order, quadrature exact", discretization_order},
      {"kinetics-free transport conserves mass", transport_conserves_mass},
      {"flat equilibria are fixed points", flat_equilibrium_fixed_point},
      {"cooperative runaway is flagged finite", cooperative_blowup},
  };

  int failures = 0;
  int id = 0;
  for (const Gate& gate : gates) {
    ++id;
    Criterion c;
    try {
      gate.fn(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("unexpected exception: ") + e.what());
    }
    std::printf("%s %2d  %s\n", c.ok ? "PASS" : "FAIL", id, gate.label);
    for (const std::string& note : c.notes) {
      std::printf("        - %s\n", note.c_str());
    }
    if (!c.ok) ++failures;
  }
  return failures;
}

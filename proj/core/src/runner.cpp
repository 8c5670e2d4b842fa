// Scenario execution: run the requested analyses, optionally integrate the
// system, and assemble the report document plus the on-disk outputs.  The
// hypothesis gate short-circuits the simulation when a certificate was
// demanded but not granted.

#include "chemolv/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>

#include <json.hpp>

#include "chemolv/boundedness.hpp"
#include "chemolv/equilibrium.hpp"
#include "chemolv/errors.hpp"
#include "chemolv/sim.hpp"
#include "chemolv/stability.hpp"

namespace chemolv {

namespace {

using json = nlohmann::ordered_json;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json conditions_json(const HypothesisReport& r) {
  json arr = json::array();
  for (const ConditionRecord& c : r.conditions) {
    json e;
    e["id"] = c.id;
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    e["margin"] = c.margin;
    e["satisfied"] = c.satisfied;
    arr.push_back(e);
  }
  return arr;
}

json matrix_json(const SymMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.order(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json equilibrium_json(const std::optional<Equilibrium>& eq, const std::string& err,
                      const Params& p) {
  json e;
  if (eq) {
    e["u"] = eq->u;
    e["v"] = eq->v;
    e["w"] = eq->w;
    e["residual"] = equilibrium_residual(p, *eq);
  } else {
    e["error"] = err;
  }
  return e;
}

double linf_distance(const Field& f, double ref) {
  double m = 0.0;
  for (double x : f.values) m = std::max(m, std::abs(x - ref));
  return m;
}

std::string build_report(const Scenario& s, const ScenarioRun& out,
                         const std::string& coex_err, const std::string& semi_err,
                         const Equilibrium* ref) {
  json doc;
  doc["scenario"] = json::parse(serialize_scenario(s));

  if (s.analysis.regime) {
    json r;
    r["class"] = to_string(out.regime.regime);
    r["r_low"] = out.regime.r_low;
    r["r_mid"] = out.regime.r_mid;
    r["r_high"] = out.regime.r_high;
    doc["regime"] = r;
  }

  json eqs;
  eqs["coexistence"] = equilibrium_json(out.coexistence, coex_err, s.params);
  eqs["semi_trivial"] = equilibrium_json(out.semitrivial, semi_err, s.params);
  doc["equilibria"] = eqs;

  if (s.analysis.boundedness) {
    const BoundednessRequest& br = *s.analysis.boundedness;
    json b;
    b["dim"] = br.dim;
    b["p_exp"] = br.p_exp;
    b["C_p"] = br.c_p;
    b["C_p_defaulted"] = br.c_p_defaulted;
    b["conditions"] = conditions_json(*out.boundedness);
    b["overall"] = out.boundedness->overall;
    doc["boundedness"] = b;
  }

  if (s.analysis.stability) {
    json st;
    st["case"] = to_string(*s.analysis.stability);
    if (out.stability) {
      st["conditions"] = conditions_json(out.stability->report);
      st["overall"] = out.stability->report.overall;
      if (out.stability->certificate) {
        const StabilityCertificate& c = *out.stability->certificate;
        json cert;
        cert["varpi1"] = c.varpi.varpi1;
        cert["varpi2"] = c.varpi.varpi2;
        cert["varpi3"] = c.varpi.varpi3;
        cert["varpi3_bar"] = c.varpi.varpi3_bar;
        cert["delta_lo"] = c.delta.lo;
        cert["delta_hi"] = c.delta.hi;
        cert["delta"] = c.delta_chosen;
        cert["P"] = matrix_json(c.P);
        cert["S"] = matrix_json(c.S);
        cert["minors_P"] = c.minors_p;
        cert["minors_S"] = c.minors_s;
        cert["positive_definite"] = c.positive_definite;
        st["certificate"] = cert;
      }
    } else {
      st["error"] = out.stability_error;
    }
    doc["stability"] = st;
  }

  if (out.outcome) {
    json sim;
    sim["outcome"] = to_string(*out.outcome);
    sim["steps"] = out.steps;
    sim["t_final"] = out.final_state->t;

    if (ref != nullptr) {
      json d;
      d["u"] = linf_distance(out.final_state->u, ref->u);
      d["v"] = linf_distance(out.final_state->v, ref->v);
      d["w"] = linf_distance(out.final_state->w, ref->w);
      d["max"] = std::max({d["u"].get<double>(), d["v"].get<double>(),
                           d["w"].get<double>()});
      sim["final_distance"] = d;
    }

    if (!out.series.empty()) {
      const double initial_mass = out.series.front().mass_u + out.series.front().mass_v;
      double max_observed = 0.0;
      for (const DiagRecord& r : out.series) {
        max_observed = std::max(max_observed, r.mass_u + r.mass_v);
      }
      const MassBound mb = mass_bound_constants(s.params);
      json m;
      m["initial"] = initial_mass;
      m["max_observed"] = max_observed;
      m["c3"] = mb.c3;
      m["c4"] = mb.c4;
      m["applicable"] = mb.applicable;
      if (mb.applicable) {
        const double cap = std::max(initial_mass, mb.reaction_cap);
        m["cap"] = cap;
        m["within_bound"] = max_observed <= 1.05 * cap;
      }
      sim["mass"] = m;
    }

    if (out.decay) {
      json d;
      d["monotone"] = out.decay->monotone;
      d["violations"] = out.decay->violations;
      if (out.decay->epsilon_hat) {
        d["epsilon_hat"] = *out.decay->epsilon_hat;
      } else {
        d["epsilon_hat"] = nullptr;
      }
      sim["decay"] = d;
    }
    doc["simulation"] = sim;
  }

  doc["exit_code"] = out.exit_code;
  doc["meta"]["generator"] = "chemolv 0.1.0";
  return doc.dump(2) + "\n";
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path.string() + " for writing");
  f << content;
  if (!f) throw Error("cannot write " + path.string());
}

std::string snapshot_text(const char* name, const Field& f, double t) {
  std::string out;
  out += std::string("# field ") + name + "\n";
  out += "# dim " + std::to_string(f.grid.dim) + "\n";
  out += "# nx " + std::to_string(f.grid.nx) + "\n";
  out += "# ny " + std::to_string(f.grid.ny) + "\n";
  out += "# Lx " + fmt17(f.grid.Lx) + "\n";
  out += "# Ly " + fmt17(f.grid.Ly) + "\n";
  out += "# hx " + fmt17(f.grid.hx) + "\n";
  out += "# hy " + fmt17(f.grid.hy) + "\n";
  out += "# t " + fmt17(t) + "\n";
  for (double x : f.values) {
    out += fmt17(x);
    out += "\n";
  }
  return out;
}

}  // namespace

ScenarioRun run_scenario(const Scenario& s, bool with_sim, std::uint64_t seed) {
  ScenarioRun out;
  out.regime = classify_regime(s.params);

  std::string coex_err;
  std::string semi_err;
  try {
    out.coexistence = coexistence_equilibrium(s.params);
  } catch (const Error& e) {
    coex_err = e.what();
  }
  try {
    out.semitrivial = semitrivial_equilibrium(s.params);
  } catch (const Error& e) {
    semi_err = e.what();
  }

  if (s.analysis.boundedness) {
    const BoundednessRequest& br = *s.analysis.boundedness;
    out.boundedness = check_boundedness(s.params, br.dim, br.p_exp, br.c_p);
  }
  if (s.analysis.stability) {
    try {
      out.stability = check_stability(s.params, *s.analysis.stability);
    } catch (const Error& e) {
      out.stability_error = e.what();
    }
  }

  bool hypothesis_fail = false;
  if (out.boundedness && !out.boundedness->overall) hypothesis_fail = true;
  if (s.analysis.stability && (!out.stability || !out.stability->report.overall)) {
    hypothesis_fail = true;
  }
  const bool gate_blocks = s.require_certificate && hypothesis_fail;
  if (gate_blocks) out.exit_code = exit_code::kHypothesisFailure;

  double delta = 1.0;
  if (out.stability && out.stability->certificate) {
    delta = out.stability->certificate->delta_chosen;
  }

  std::optional<Equilibrium> ref;
  if (with_sim && !gate_blocks) {
    if (s.reference == ReferenceChoice::Coexistence) {
      if (!out.coexistence) {
        throw ValidationError("reference: coexistence state unavailable: " + coex_err);
      }
      ref = out.coexistence;
    } else if (s.reference == ReferenceChoice::SemiTrivial) {
      if (!out.semitrivial) {
        throw ValidationError("reference: u-extinction state unavailable: " + semi_err);
      }
      ref = out.semitrivial;
    }

    SimState initial = build_initial_state(s, seed);
    std::unique_ptr<TrajectoryRecorder> rec;
    if (ref) {
      rec = std::make_unique<TrajectoryRecorder>(s.params, *ref, delta,
                                                 s.sim.convergence_tol);
    } else {
      rec = std::make_unique<TrajectoryRecorder>(s.params);
    }

    RunResult rr = run(std::move(initial), s.params, s.sim, rec.get());
    out.outcome = rr.outcome;
    out.final_state = std::move(rr.state);
    out.steps = rr.steps;
    out.series = rec->records();
    if (ref) {
      try {
        out.decay = check_decay(out.series);
      } catch (const Error&) {
        // Too few usable records: leave the verdict absent.
      }
    }

    switch (*out.outcome) {
      case Outcome::BlowUp:
        out.exit_code = exit_code::kBlowUp;
        break;
      case Outcome::StepUnderflow:
        out.exit_code = exit_code::kStepUnderflow;
        break;
      case Outcome::Converged:
      case Outcome::ReachedTEnd:
        out.exit_code = exit_code::kOk;
        break;
    }
  }

  out.report_json = build_report(s, out, coex_err, semi_err, ref ? &*ref : nullptr);
  return out;
}

std::string series_csv(const std::vector<DiagRecord>& series) {
  std::string out =
      "t,mass_u,mass_v,linf_u,linf_v,linf_w,"
      "l2_dist_u,l2_dist_v,l2_dist_w,grad_w_sq,E,F\n";
  for (const DiagRecord& r : series) {
    out += fmt17(r.t) + "," + fmt17(r.mass_u) + "," + fmt17(r.mass_v) + "," +
           fmt17(r.linf_u) + "," + fmt17(r.linf_v) + "," + fmt17(r.linf_w) + "," +
           fmt17(r.l2_dist_u) + "," + fmt17(r.l2_dist_v) + "," + fmt17(r.l2_dist_w) +
           "," + fmt17(r.grad_w_sq) + "," + fmt17(r.E) + "," + fmt17(r.F) + "\n";
  }
  return out;
}

std::vector<std::string> write_outputs(const ScenarioRun& run,
                                       const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw Error("cannot create output directory " + out_dir.string() + ": " +
                ec.message());
  }

  std::vector<std::string> written;
  write_text(out_dir / "report.json", run.report_json);
  written.push_back("report.json");

  if (run.final_state) {
    write_text(out_dir / "series.csv", series_csv(run.series));
    written.push_back("series.csv");
    const SimState& st = *run.final_state;
    write_text(out_dir / "snapshot_u.txt", snapshot_text("u", st.u, st.t));
    written.push_back("snapshot_u.txt");
    write_text(out_dir / "snapshot_v.txt", snapshot_text("v", st.v, st.t));
    written.push_back("snapshot_v.txt");
    write_text(out_dir / "snapshot_w.txt", snapshot_text("w", st.w, st.t));
    written.push_back("snapshot_w.txt");
  }
  return written;
}

}  // namespace chemolv

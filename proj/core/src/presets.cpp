// Shipped example scenarios, one per qualitative behavior the solver
// exhibits: certified convergence to coexistence, certified extinction of
// the first species, a reduced two-parameter system, a hypothesis-gate
// rejection, and an aggressive-cooperation blow-up guard trip.

#include "chemolv/presets.hpp"

#include "chemolv/errors.hpp"
#include "chemolv/reduction.hpp"

namespace chemolv {

namespace {

Scenario weak_w1() {
  Scenario s;
  s.name = "weak-w1";
  s.params.d1 = s.params.d2 = s.params.d3 = 1.0;
  s.params.chi1 = s.params.chi2 = 0.5;
  s.params.a0 = 1.0;
  s.params.a1 = 1.5;
  s.params.a2 = 1.0;
  s.params.a3 = s.params.a4 = 0.1;
  s.params.b0 = 1.0;
  s.params.b1 = 1.0;
  s.params.b2 = 1.5;
  s.params.b3 = s.params.b4 = 0.1;
  s.params.lambda = s.params.k = s.params.l = 1.0;
  s.params.omega_measure = 1.0;

  s.grid = GridSpec{1, 128, 1, 1.0, 0.0};

  s.sim.dt_init = 5e-3;
  s.sim.t_end = 100.0;
  s.sim.record_every = 25;
  s.sim.convergence_tol = 1e-6;

  s.initial.kind = InitialKind::EquilibriumPerturbation;
  s.initial.amplitude = 0.1;
  s.initial.modes = {1};

  s.analysis.regime = true;
  s.analysis.boundedness = BoundednessRequest{1, 2.0, 1.0, true};
  s.analysis.stability = StabilityCase::Weak;
  s.reference = ReferenceChoice::Coexistence;
  s.require_certificate = true;
  return s;
}

Scenario asym_a1() {
  Scenario s;
  s.name = "asym-a1";
  s.params.d1 = s.params.d2 = s.params.d3 = 1.0;
  s.params.chi1 = s.params.chi2 = 0.5;
  s.params.a0 = 1.0;
  s.params.a1 = 2.0;
  s.params.a2 = 1.0;
  s.params.a3 = s.params.a4 = 0.1;
  s.params.b0 = 3.0;
  s.params.b1 = 1.0;
  s.params.b2 = 2.0;
  s.params.b3 = s.params.b4 = 0.1;
  s.params.lambda = s.params.k = s.params.l = 1.0;
  s.params.omega_measure = 1.0;

  s.grid = GridSpec{1, 128, 1, 1.0, 0.0};

  s.sim.dt_init = 5e-3;
  s.sim.t_end = 60.0;
  s.sim.record_every = 25;
  s.sim.convergence_tol = 1e-6;

  s.initial.kind = InitialKind::Constant;
  s.initial.u = 0.3;
  s.initial.v = 1.2;
  s.initial.w = 1.2;

  s.analysis.regime = true;
  s.analysis.boundedness = BoundednessRequest{1, 2.0, 1.0, true};
  s.analysis.stability = StabilityCase::Asymmetric;
  s.reference = ReferenceChoice::SemiTrivial;
  s.require_certificate = true;
  return s;
}

Scenario tw_weak() {
  Scenario s;
  s.name = "tw-weak";
  Params base;
  base.d1 = base.d2 = base.d3 = 1.0;
  base.chi1 = base.chi2 = 0.25;
  base.lambda = base.k = base.l = 1.0;
  base.omega_measure = 1.0;
  s.params = reduce_tello_winkler(base, 2.0, 2.0, 0.5, 0.5);

  s.grid = GridSpec{1, 128, 1, 1.0, 0.0};

  s.sim.dt_init = 5e-3;
  s.sim.t_end = 40.0;
  s.sim.record_every = 25;
  s.sim.convergence_tol = 1e-6;

  s.initial.kind = InitialKind::EquilibriumPerturbation;
  s.initial.amplitude = 0.1;
  s.initial.modes = {1};

  s.analysis.regime = true;
  s.analysis.boundedness = BoundednessRequest{1, 2.0, 1.0, true};
  s.analysis.stability = StabilityCase::Weak;
  s.reference = ReferenceChoice::Coexistence;
  s.require_certificate = true;
  return s;
}

Scenario coop_fail() {
  Scenario s;
  s.name = "coop-fail";
  s.params.d1 = s.params.d2 = s.params.d3 = 1.0;
  s.params.chi1 = s.params.chi2 = 0.5;
  s.params.a0 = 1.0;
  s.params.a1 = 0.5;
  s.params.a2 = 0.5;
  s.params.a3 = s.params.a4 = -1.0;
  s.params.b0 = 1.0;
  s.params.b1 = 0.5;
  s.params.b2 = 0.5;
  s.params.b3 = s.params.b4 = -1.0;
  s.params.lambda = s.params.k = s.params.l = 1.0;
  s.params.omega_measure = 1.0;

  s.grid = GridSpec{2, 32, 32, 1.0, 1.0};

  s.sim.t_end = 10.0;

  s.initial.kind = InitialKind::Constant;
  s.initial.u = s.initial.v = s.initial.w = 1.0;

  s.analysis.regime = true;
  s.analysis.boundedness = BoundednessRequest{2, 3.0, 1.0, true};
  s.reference = ReferenceChoice::None;
  s.require_certificate = true;
  return s;
}

Scenario coop_blowup() {
  Scenario s;
  s.name = "coop-blowup";
  s.params.d1 = s.params.d2 = s.params.d3 = 1.0;
  s.params.chi1 = s.params.chi2 = 5.0;
  s.params.a0 = 1.0;
  s.params.a1 = 0.1;
  s.params.a2 = 0.1;
  s.params.a3 = s.params.a4 = -5.0;
  s.params.b0 = 1.0;
  s.params.b1 = 0.1;
  s.params.b2 = 0.1;
  s.params.b3 = s.params.b4 = -5.0;
  s.params.lambda = s.params.k = s.params.l = 1.0;
  s.params.omega_measure = 1.0;

  s.grid = GridSpec{1, 64, 1, 1.0, 0.0};

  s.sim.dt_init = 1e-3;
  s.sim.t_end = 10.0;

  s.initial.kind = InitialKind::Constant;
  s.initial.u = s.initial.v = s.initial.w = 1.0;

  s.analysis.regime = true;
  s.analysis.boundedness = BoundednessRequest{1, 2.0, 1.0, true};
  s.reference = ReferenceChoice::None;
  s.require_certificate = false;
  return s;
}

}  // namespace

std::vector<PresetInfo> preset_catalog() {
  return {
      {"weak-w1", "weak competition: certified decay to the coexistence state"},
      {"asym-a1", "strongly asymmetric competition: first species dies out"},
      {"tw-weak", "two-parameter reduced system in the weak regime"},
      {"coop-fail", "cooperation breaks the dominance hypothesis; analysis gate rejects"},
      {"coop-blowup", "strong cooperation and taxis; the blow-up guard trips"},
  };
}

Scenario preset_scenario(const std::string& name) {
  if (name == "weak-w1") return weak_w1();
  if (name == "asym-a1") return asym_a1();
  if (name == "tw-weak") return tw_weak();
  if (name == "coop-fail") return coop_fail();
  if (name == "coop-blowup") return coop_blowup();
  throw ValidationError("unknown preset: " + name);
}

}  // namespace chemolv

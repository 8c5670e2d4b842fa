#pragma once

#include "chemolv/grid.hpp"
#include "chemolv/params.hpp"

namespace chemolv {

// Densities below -kNegativityTol count as a breach; smaller undershoots are
// quadrature noise and pass through.
inline constexpr double kNegativityTol = 1e-10;

struct SimState {
  double t = 0.0;
  Field u;
  Field v;
  Field w;
};

struct SimConfig {
  double dt_init = 1e-2;           // requested step; may be capped at start
  double t_end = 10.0;
  double dt_min = 1e-10;           // below this the run aborts as underflow
  double safety = 0.5;             // rejected steps halve dt; after 10 clean
                                   // steps dt regrows by 1/safety, in (0,1]
  double blowup_threshold = 1e8;   // sup-norm guard on all three fields
  int record_every = 20;           // diagnostic cadence in accepted steps
  double convergence_tol = 1e-6;   // sup-distance for early stopping; <= 0
                                   // disables the check

  bool operator==(const SimConfig&) const = default;
};

enum class Outcome { Converged, ReachedTEnd, BlowUp, StepUnderflow };

const char* to_string(Outcome o);

enum class StepStatus { Ok, NegativityBreach, SolverDiverged, BlowUp };

// Kinetic right-hand sides at the current state, with the two domain
// integrals evaluated once and shared across cells:
//
//   ru = u (a0 - a1 u - a2 v - a3 I[u] - a4 I[v])
//   rv = v (b0 - b1 u - b2 v - b3 I[u] - b4 I[v])
struct ReactionRates {
  Field u_rate;
  Field v_rate;
};

ReactionRates reaction_rhs(const SimState& s, const Params& p);

// One IMEX Euler step: chemotaxis, kinetics and signal production advance
// explicitly, then diffusion (and signal decay) are folded in implicitly,
//
//   u+ = H(d1, 0)   [u + dt (-chi1 div(u grad w) + ru)]
//   v+ = H(d2, 0)   [v + dt (-chi2 div(v grad w) + rv)]
//   w+ = H(d3, lam) [w + dt (k u + l v)]
//
// where H(d, c) is the backward-Euler solve of implicit_helmholtz_solve.
// The candidate is rejected with NegativityBreach when a density drops below
// -kNegativityTol, with BlowUp when any field exceeds blowup_threshold in
// sup norm or stops being finite; `out` is only valid on Ok.
StepStatus try_step(const SimState& in, const Params& p, double dt,
                    double blowup_threshold, SimState& out);

// try_step that returns the new state and throws NegativityBreach,
// SolverDiverged or BlowUpGuard instead of reporting a status.
SimState step(const SimState& s, const Params& p, double dt);

// Receives the trajectory at the recording cadence.  `converged` is polled
// at the same cadence and ends the run when it returns true.
class DiagnosticSink {
 public:
  virtual ~DiagnosticSink() = default;
  virtual void record(const SimState& s) = 0;
  virtual bool converged(const SimState&) const { return false; }
};

struct RunResult {
  SimState state;
  Outcome outcome = Outcome::ReachedTEnd;
  long long steps = 0;
};

// Adaptive time loop from the given state to t_end.  The initial dt is
// cfg.dt_init capped by the chemotactic transport heuristic
// 0.1 h / (max chi (1 + max |grad w0|)); rejected steps (negativity or a
// failed solve) halve dt and StepUnderflow is declared below dt_min.  The
// final partial step lands on t_end exactly.  The sink may be null.
RunResult run(SimState initial, const Params& p, const SimConfig& cfg,
              DiagnosticSink* sink = nullptr);

}  // namespace chemolv

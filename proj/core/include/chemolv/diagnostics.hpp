#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "chemolv/equilibrium.hpp"
#include "chemolv/sim.hpp"

namespace chemolv {

// One row of the time series.  Norms are plain sup norms of the fields; the
// l2_dist entries are squared L2 distances to the reference state, so their
// sum is the dissipation functional F.  E and F stay NaN when no reference
// state is attached.
struct DiagRecord {
  double t = 0.0;
  double mass_u = 0.0;
  double mass_v = 0.0;
  double linf_u = 0.0;
  double linf_v = 0.0;
  double linf_w = 0.0;
  double l2_dist_u = 0.0;
  double l2_dist_v = 0.0;
  double l2_dist_w = 0.0;
  double grad_w_sq = 0.0;
  double E = std::numeric_limits<double>::quiet_NaN();
  double F = std::numeric_limits<double>::quiet_NaN();
};

struct LyapunovValue {
  double E = 0.0;
  double F = 0.0;
};

// Lyapunov pair around the coexistence state (u*, v*, w*):
//
//   E = I[u - u* - u* log(u/u*)] + (a2/b1) I[v - v* - v* log(v/v*)]
//       + (delta/2) I[(w - w*)^2]
//   F = I[(u - u*)^2] + I[(v - v*)^2] + I[(w - w*)^2]
//
// The v term carries the weight a2/b1 under which the decay estimate
// E' <= -eps F holds whenever the stability matrices are positive definite.
// Requires delta > 0 and cellwise positive u, v; throws NonpositiveDensity
// otherwise.
LyapunovValue lyapunov_weak(const SimState& s, const Params& p,
                            const Equilibrium& coexistence, double delta);

// Lyapunov pair around the u-extinction state (0, v~, w~):
//
//   E = I[u] + (a2/b1) I[v - v~ - v~ log(v/v~)] + (delta2/2) I[(w - w~)^2]
//   F = I[u^2] + I[(v - v~)^2] + I[(w - w~)^2]
//
// Requires delta2 > 0, cellwise nonnegative u and positive v; throws
// NonpositiveDensity otherwise.
LyapunovValue lyapunov_asym(const SimState& s, const Params& p,
                            const Equilibrium& semitrivial, double delta2);

// Trend analysis of E over the records, skipping rows with NaN E.
//
//   monotone:    no increase of E beyond tol_E = 1e-8 max(1, E(first row))
//   violations:  number of increases beyond tol_E
//   epsilon_hat: min over consecutive rows of
//                [E(t_n) - E(t_n+1)] / [(t_n+1 - t_n) F(t_n)]
//                restricted to rows with F(t_n) > 1e-12; absent when no row
//                qualifies
//
// Throws InsufficientData on fewer than 3 usable rows or nonincreasing time.
struct DecayVerdict {
  bool monotone = false;
  std::optional<double> epsilon_hat;
  int violations = 0;
};

DecayVerdict check_decay(const std::vector<DiagRecord>& series);

// True when every field is within tol of the reference state in sup norm.
bool detect_convergence(const SimState& s, const Equilibrium& ref, double tol);

// Builds a record; `ref` may be null for norm-only rows.  With a reference,
// E/F use lyapunov_weak or lyapunov_asym according to the state kind, and a
// nonpositive density leaves E and F at NaN instead of failing the run.
DiagRecord make_diag_record(const SimState& s, const Params& p,
                            const Equilibrium* ref, double delta);

// Sink that accumulates records and stops the run near the reference state.
class TrajectoryRecorder : public DiagnosticSink {
 public:
  // Norm-only recording, never reports convergence.
  explicit TrajectoryRecorder(const Params& p);

  // Records Lyapunov data against `ref`; convergence_tol <= 0 disables the
  // early stop.
  TrajectoryRecorder(const Params& p, const Equilibrium& ref, double delta,
                     double convergence_tol);

  void record(const SimState& s) override;
  bool converged(const SimState& s) const override;

  const std::vector<DiagRecord>& records() const { return records_; }

 private:
  Params params_;
  std::optional<Equilibrium> ref_;
  double delta_ = 1.0;
  double tol_ = 0.0;
  std::vector<DiagRecord> records_;
};

}  // namespace chemolv

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chemolv/scenario.hpp"

namespace chemolv {

// One swept scalar: a dotted path into the scenario document (for example
// "params.a1" or "sim.t_end") and the values it takes.
struct SweepAxis {
  std::string path;
  std::vector<double> values;

  bool operator==(const SweepAxis&) const = default;
};

// Cartesian sweep over a base scenario.  The base comes either inline or
// from a preset name.  Point count is capped by max_points.
struct SweepSpec {
  Scenario base;
  std::vector<SweepAxis> axes;
  int max_points = 4096;
  bool simulate = true;

  bool operator==(const SweepSpec&) const = default;
};

// Parses {"base": {...} | "base_preset": "name", "axes": [{"path", "values"}],
// "max_points": n, "simulate": bool}.  Unknown keys are rejected; every axis
// path must name an existing numeric scalar in the scenario document.
SweepSpec parse_sweep(const std::string& text);

struct SweepRow {
  std::vector<double> values;      // one per axis, in axis order
  std::string regime;
  double r_low = 0.0, r_mid = 0.0, r_high = 0.0;
  std::vector<double> margins;     // one per margin column, NaN when absent
  std::string outcome;             // empty when not simulated
  double final_dist = 0.0;         // sup distance to the reference, NaN when absent
  double epsilon_hat = 0.0;        // NaN when absent
  std::string error;               // per-point failure, empty on success
};

struct SweepResult {
  std::vector<std::string> columns;  // full CSV header, in order
  std::vector<SweepRow> rows;        // cartesian order, first axis slowest
};

// Runs every point, distributing across at most `jobs` threads (0 picks a
// hardware-based default).  Per-point failures land in the row's error
// column; the sweep itself only throws for an invalid spec.  Row order does
// not depend on scheduling.
SweepResult run_sweep(const SweepSpec& spec, std::uint64_t seed, int jobs = 0);

// CSV rendering of the result, 17 significant digits.
std::string sweep_csv(const SweepResult& result);

}  // namespace chemolv

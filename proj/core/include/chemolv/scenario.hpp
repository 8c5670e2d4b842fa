#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chemolv/grid.hpp"
#include "chemolv/params.hpp"
#include "chemolv/sim.hpp"
#include "chemolv/stability.hpp"

namespace chemolv {

// Initial data constructions.  Perturbation fields are relative:
//   base * (1 + amplitude * profile)
// with |profile| <= 1, so any amplitude in [0, 1) keeps the data nonnegative.
enum class InitialKind {
  Constant,                  // flat u, v, w levels
  EquilibriumPerturbation,   // reference state times (1 + amp * cos products)
  Explicit,                  // per-cell arrays, row-major
  Random,                    // reference state times (1 + amp * uniform noise)
};

struct InitialSpec {
  InitialKind kind = InitialKind::Constant;
  double u = 1.0, v = 1.0, w = 1.0;     // Constant levels
  double amplitude = 0.1;               // EquilibriumPerturbation / Random
  std::vector<int> modes;               // cosine mode count per axis
  std::vector<double> u_values, v_values, w_values;  // Explicit

  bool operator==(const InitialSpec&) const = default;
};

struct GridSpec {
  int dim = 1;
  int nx = 0, ny = 1;
  double lx = 0.0, ly = 0.0;

  bool operator==(const GridSpec&) const = default;
};

// Which homogeneous state anchors convergence detection and Lyapunov rows.
enum class ReferenceChoice { None, Coexistence, SemiTrivial };

struct BoundednessRequest {
  int dim = 1;
  double p_exp = 0.0;        // only meaningful for dim >= 3
  double c_p = 1.0;
  bool c_p_defaulted = true; // no user-supplied smoothing constant

  bool operator==(const BoundednessRequest&) const = default;
};

struct AnalysisRequests {
  bool regime = true;
  std::optional<BoundednessRequest> boundedness;
  std::optional<StabilityCase> stability;

  bool operator==(const AnalysisRequests&) const = default;
};

// A fully resolved scenario document.  parse_scenario applies defaults, so
// serialize/parse round-trips reproduce the struct exactly.
struct Scenario {
  std::string name;
  Params params;
  GridSpec grid;
  SimConfig sim;
  InitialSpec initial;
  AnalysisRequests analysis;
  ReferenceChoice reference = ReferenceChoice::None;
  bool require_certificate = false;

  bool operator==(const Scenario&) const = default;
};

// Parses and validates a scenario document.  Unknown keys anywhere are
// rejected.  Throws ParseError for malformed JSON or wrong types and
// ValidationError (message prefixed with the field path) for constraint
// violations.
Scenario parse_scenario(const std::string& text);

// Canonical JSON of a scenario, stable key order, round-trip exact.
std::string serialize_scenario(const Scenario& s);

Grid make_grid(const GridSpec& gs);

// Materializes the initial fields on the grid.  The seed feeds the Random
// construction only.  Throws ValidationError when the construction needs a
// reference state the parameters do not provide, when explicit arrays have
// the wrong length, or when any initial value is negative.
SimState build_initial_state(const Scenario& s, std::uint64_t seed);

const char* to_string(ReferenceChoice r);

}  // namespace chemolv

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "chemolv/diagnostics.hpp"
#include "chemolv/regime.hpp"
#include "chemolv/scenario.hpp"

namespace chemolv {

// Process exit codes shared by the library runner and the command line tool.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;          // I/O and internal errors
inline constexpr int kValidation = 2;       // bad document or bad values
inline constexpr int kBlowUp = 3;
inline constexpr int kStepUnderflow = 4;
inline constexpr int kHypothesisFailure = 5;  // certificate demanded, not granted
}  // namespace exit_code

// Everything a scenario run produces.  `report_json` is the pretty-printed
// report document; the structured fields mirror its content for programmatic
// use.
struct ScenarioRun {
  int exit_code = exit_code::kOk;
  std::string report_json;

  RegimeClass regime;
  std::optional<Equilibrium> coexistence;
  std::optional<Equilibrium> semitrivial;
  std::optional<HypothesisReport> boundedness;
  std::optional<StabilityResult> stability;
  std::string stability_error;  // set when check_stability threw

  std::optional<Outcome> outcome;           // present when simulated
  std::optional<SimState> final_state;
  std::vector<DiagRecord> series;
  std::optional<DecayVerdict> decay;
  long long steps = 0;
};

// Runs the requested analyses and, when `with_sim` is set, the simulation.
// When the scenario demands a certificate and any requested hypothesis set
// fails (or its check throws), the simulation is skipped and the exit code
// is kHypothesisFailure.  Throws only for validation-stage problems; runtime
// outcomes are reported through exit_code.
ScenarioRun run_scenario(const Scenario& s, bool with_sim, std::uint64_t seed);

// Writes report.json plus, for simulated runs, series.csv and one
// snapshot_<field>.txt per field into out_dir (created if needed).
// Returns the files written, relative to out_dir.
std::vector<std::string> write_outputs(const ScenarioRun& run,
                                       const std::filesystem::path& out_dir);

// series.csv content: header plus one row per record, 17 significant digits.
std::string series_csv(const std::vector<DiagRecord>& series);

}  // namespace chemolv

// Command line front end.
//
//   chemolv analyze  --scenario f.json | --preset name  [--out dir] [--seed n]
//   chemolv simulate --scenario f.json | --preset name  [--out dir] [--seed n]
//   chemolv sweep    --scenario sweep.json  [--out dir] [--seed n] [--jobs n]
//   chemolv presets  [--preset name]
//
// analyze runs the requested hypothesis checks and writes report.json;
// simulate additionally integrates the system and writes series.csv and
// final-state snapshots; sweep runs a cartesian parameter study and writes
// sweep.csv; presets lists the shipped scenarios or dumps one as JSON.
//
// Exit codes: 0 success, 1 I/O or internal error, 2 invalid document or
// arguments, 3 blow-up guard, 4 time-step underflow, 5 hypothesis failure
// when the scenario demands a certificate.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chemolv/errors.hpp"
#include "chemolv/presets.hpp"
#include "chemolv/runner.hpp"
#include "chemolv/scenario.hpp"
#include "chemolv/sweep.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw chemolv::Error("cannot read " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  if (f.bad()) throw chemolv::Error("cannot read " + path);
  return buf.str();
}

chemolv::Scenario load_scenario(const std::string& scenario_path,
                                const std::string& preset) {
  if (!preset.empty()) return chemolv::preset_scenario(preset);
  return chemolv::parse_scenario(read_file(scenario_path));
}

int run_one(const std::string& scenario_path, const std::string& preset,
            const std::string& out_dir, std::uint64_t seed, bool with_sim) {
  const chemolv::Scenario s = load_scenario(scenario_path, preset);
  const chemolv::ScenarioRun run = chemolv::run_scenario(s, with_sim, seed);
  for (const std::string& name : chemolv::write_outputs(run, out_dir)) {
    std::cout << out_dir << "/" << name << "\n";
  }
  if (run.outcome) {
    std::cout << "outcome: " << chemolv::to_string(*run.outcome) << "\n";
  }
  std::cout << "exit: " << run.exit_code << "\n";
  return run.exit_code;
}

int run_sweep_cmd(const std::string& scenario_path, const std::string& out_dir,
                  std::uint64_t seed, int jobs) {
  const chemolv::SweepSpec spec = chemolv::parse_sweep(read_file(scenario_path));
  const chemolv::SweepResult res = chemolv::run_sweep(spec, seed, jobs);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw chemolv::Error("cannot create output directory " + out_dir + ": " +
                         ec.message());
  }
  const std::string path = out_dir + "/sweep.csv";
  std::ofstream f(path, std::ios::binary);
  if (!f) throw chemolv::Error("cannot open " + path + " for writing");
  f << chemolv::sweep_csv(res);
  if (!f) throw chemolv::Error("cannot write " + path);

  std::cout << path << "\n";
  std::cout << "points: " << res.rows.size() << "\n";
  return chemolv::exit_code::kOk;
}

int run_presets_cmd(const std::string& preset) {
  if (!preset.empty()) {
    std::cout << chemolv::serialize_scenario(chemolv::preset_scenario(preset));
    return chemolv::exit_code::kOk;
  }
  for (const chemolv::PresetInfo& info : chemolv::preset_catalog()) {
    std::cout << info.name << "  " << info.summary << "\n";
  }
  return chemolv::exit_code::kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for a two-species chemotaxis-competition system"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string preset;
  std::string out_dir = "chemolv-out";
  std::uint64_t seed = 0;
  int jobs = 0;

  CLI::App* analyze = app.add_subcommand("analyze", "run hypothesis checks only");
  CLI::App* simulate = app.add_subcommand("simulate", "run checks and integrate");
  for (CLI::App* sub : {analyze, simulate}) {
    sub->add_option("--scenario", scenario_path, "scenario JSON file");
    sub->add_option("--preset", preset, "shipped scenario name");
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", seed, "seed for random initial data");
  }

  CLI::App* sweep = app.add_subcommand("sweep", "run a cartesian parameter study");
  sweep->add_option("--scenario", scenario_path, "sweep JSON file")->required();
  sweep->add_option("--out", out_dir, "output directory");
  sweep->add_option("--seed", seed, "seed for random initial data");
  sweep->add_option("--jobs", jobs, "worker threads (0 = automatic)");

  CLI::App* presets = app.add_subcommand("presets", "list shipped scenarios");
  presets->add_option("--preset", preset, "dump this scenario as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? 0 : chemolv::exit_code::kValidation;
  }

  try {
    if (analyze->parsed() || simulate->parsed()) {
      if (scenario_path.empty() == preset.empty()) {
        std::cerr << "error: exactly one of --scenario and --preset is required\n";
        return chemolv::exit_code::kValidation;
      }
      return run_one(scenario_path, preset, out_dir, seed, simulate->parsed());
    }
    if (sweep->parsed()) return run_sweep_cmd(scenario_path, out_dir, seed, jobs);
    return run_presets_cmd(preset);
  } catch (const chemolv::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return chemolv::exit_code::kValidation;
  } catch (const chemolv::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return chemolv::exit_code::kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return chemolv::exit_code::kFailure;
  }
}

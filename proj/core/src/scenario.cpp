#include "chemolv/scenario.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "chemolv/equilibrium.hpp"
#include "chemolv/errors.hpp"

namespace chemolv {

namespace {

using json = nlohmann::ordered_json;

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

[[noreturn]] void validation_fail(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) {
    parse_fail(path.empty() ? "document" : path, "must be an object");
  }
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* a : allowed) {
      if (item.key() == a) {
        known = true;
        break;
      }
    }
    if (!known) validation_fail(join(path, item.key()), "unknown key");
  }
}

const json& member(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) parse_fail(join(path, key), "missing required field");
  return obj.at(key);
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) parse_fail(path, "must be a number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& path) {
  const double d = as_number(v, path);
  if (d != std::floor(d) || std::abs(d) > 2e9) parse_fail(path, "must be an integer");
  return static_cast<int>(d);
}

double get_number(const json& obj, const std::string& path, const char* key) {
  return as_number(member(obj, path, key), join(path, key));
}

double get_number_or(const json& obj, const std::string& path, const char* key,
                     double fallback) {
  if (!obj.contains(key)) return fallback;
  return as_number(obj.at(key), join(path, key));
}

int get_int_or(const json& obj, const std::string& path, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  return as_int(obj.at(key), join(path, key));
}

bool get_bool_or(const json& obj, const std::string& path, const char* key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_boolean()) parse_fail(join(path, key), "must be a boolean");
  return v.get<bool>();
}

std::string get_string(const json& obj, const std::string& path, const char* key) {
  const json& v = member(obj, path, key);
  if (!v.is_string()) parse_fail(join(path, key), "must be a string");
  return v.get<std::string>();
}

std::vector<double> get_number_array(const json& obj, const std::string& path,
                                     const char* key) {
  const json& v = member(obj, path, key);
  if (!v.is_array()) parse_fail(join(path, key), "must be an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(as_number(e, join(path, key)));
  return out;
}

Params parse_params(const json& obj) {
  check_keys(obj, "params",
             {"d1", "d2", "d3", "chi1", "chi2", "a0", "a1", "a2", "a3", "a4",
              "b0", "b1", "b2", "b3", "b4", "lambda", "k", "l", "omega_measure"});
  Params p;
  p.d1 = get_number(obj, "params", "d1");
  p.d2 = get_number(obj, "params", "d2");
  p.d3 = get_number(obj, "params", "d3");
  p.chi1 = get_number(obj, "params", "chi1");
  p.chi2 = get_number(obj, "params", "chi2");
  p.a0 = get_number(obj, "params", "a0");
  p.a1 = get_number(obj, "params", "a1");
  p.a2 = get_number(obj, "params", "a2");
  p.a3 = get_number(obj, "params", "a3");
  p.a4 = get_number(obj, "params", "a4");
  p.b0 = get_number(obj, "params", "b0");
  p.b1 = get_number(obj, "params", "b1");
  p.b2 = get_number(obj, "params", "b2");
  p.b3 = get_number(obj, "params", "b3");
  p.b4 = get_number(obj, "params", "b4");
  p.lambda = get_number(obj, "params", "lambda");
  p.k = get_number(obj, "params", "k");
  p.l = get_number(obj, "params", "l");
  p.omega_measure = get_number(obj, "params", "omega_measure");

  const std::vector<std::string> problems = validate(p);
  if (!problems.empty()) {
    std::string msg;
    for (const auto& pr : problems) {
      if (!msg.empty()) msg += "; ";
      msg += "params." + pr;
    }
    throw ValidationError(msg);
  }
  return p;
}

GridSpec parse_grid(const json& obj) {
  check_keys(obj, "grid", {"dim", "n", "L"});
  GridSpec gs;
  gs.dim = get_int_or(obj, "grid", "dim", 1);
  if (gs.dim != 1 && gs.dim != 2) validation_fail("grid.dim", "must be 1 or 2");

  const json& n = member(obj, "grid", "n");
  if (n.is_array()) {
    if (static_cast<int>(n.size()) != gs.dim) {
      validation_fail("grid.n", "array length must equal dim");
    }
    gs.nx = as_int(n.at(0), "grid.n");
    gs.ny = gs.dim == 2 ? as_int(n.at(1), "grid.n") : 1;
  } else {
    gs.nx = as_int(n, "grid.n");
    gs.ny = gs.dim == 2 ? gs.nx : 1;
  }

  if (obj.contains("L")) {
    const json& length = obj.at("L");
    if (length.is_array()) {
      if (static_cast<int>(length.size()) != gs.dim) {
        validation_fail("grid.L", "array length must equal dim");
      }
      gs.lx = as_number(length.at(0), "grid.L");
      gs.ly = gs.dim == 2 ? as_number(length.at(1), "grid.L") : 0.0;
    } else {
      gs.lx = as_number(length, "grid.L");
      gs.ly = gs.dim == 2 ? gs.lx : 0.0;
    }
  } else {
    gs.lx = 1.0;
    gs.ly = gs.dim == 2 ? 1.0 : 0.0;
  }

  make_grid(gs);  // range checks live with the grid constructors
  return gs;
}

SimConfig parse_sim(const json& obj) {
  check_keys(obj, "sim",
             {"dt_init", "t_end", "dt_min", "safety", "blowup_threshold",
              "record_every", "convergence_tol"});
  const SimConfig defaults;
  SimConfig sc;
  sc.dt_init = get_number_or(obj, "sim", "dt_init", defaults.dt_init);
  sc.t_end = get_number_or(obj, "sim", "t_end", defaults.t_end);
  sc.dt_min = get_number_or(obj, "sim", "dt_min", defaults.dt_min);
  sc.safety = get_number_or(obj, "sim", "safety", defaults.safety);
  sc.blowup_threshold = get_number_or(obj, "sim", "blowup_threshold", defaults.blowup_threshold);
  sc.record_every = get_int_or(obj, "sim", "record_every", defaults.record_every);
  sc.convergence_tol = get_number_or(obj, "sim", "convergence_tol", defaults.convergence_tol);

  if (!(sc.t_end > 0.0) || !std::isfinite(sc.t_end)) {
    validation_fail("sim.t_end", "must be positive and finite");
  }
  if (!(sc.dt_min > 0.0)) validation_fail("sim.dt_min", "must be positive");
  if (!(sc.dt_min < sc.dt_init)) validation_fail("sim.dt_init", "must exceed dt_min");
  if (!(sc.dt_init <= sc.t_end)) validation_fail("sim.dt_init", "must not exceed t_end");
  if (!(sc.safety > 0.0) || !(sc.safety <= 1.0)) {
    validation_fail("sim.safety", "must lie in (0, 1]");
  }
  if (!(sc.blowup_threshold > 0.0)) {
    validation_fail("sim.blowup_threshold", "must be positive");
  }
  if (sc.record_every < 1) validation_fail("sim.record_every", "must be at least 1");
  if (std::isnan(sc.convergence_tol)) {
    validation_fail("sim.convergence_tol", "must not be NaN");
  }
  return sc;
}

void check_amplitude(double amp) {
  if (!(amp >= 0.0) || !(amp < 1.0)) {
    validation_fail("initial.amplitude", "relative amplitude must lie in [0, 1)");
  }
}

void check_cells(const std::vector<double>& cells, const char* key, int expected) {
  if (static_cast<int>(cells.size()) != expected) {
    validation_fail(std::string("initial.") + key,
                    "needs exactly one value per grid cell");
  }
  for (double c : cells) {
    if (!std::isfinite(c) || c < 0.0) {
      validation_fail(std::string("initial.") + key,
                      "cells must be finite and nonnegative");
    }
  }
}

InitialSpec parse_initial(const json& obj, const GridSpec& gs) {
  InitialSpec init;
  const std::string type = get_string(obj, "initial", "type");

  if (type == "constant") {
    check_keys(obj, "initial", {"type", "u", "v", "w"});
    init.kind = InitialKind::Constant;
    init.u = get_number(obj, "initial", "u");
    init.v = get_number(obj, "initial", "v");
    init.w = get_number(obj, "initial", "w");
    if (init.u < 0.0 || init.v < 0.0 || init.w < 0.0 || !std::isfinite(init.u) ||
        !std::isfinite(init.v) || !std::isfinite(init.w)) {
      validation_fail("initial", "levels must be finite and nonnegative");
    }
  } else if (type == "equilibrium_perturbation") {
    check_keys(obj, "initial", {"type", "amplitude", "modes"});
    init.kind = InitialKind::EquilibriumPerturbation;
    init.amplitude = get_number_or(obj, "initial", "amplitude", 0.1);
    check_amplitude(init.amplitude);
    if (obj.contains("modes")) {
      const json& modes = obj.at("modes");
      if (modes.is_array()) {
        if (static_cast<int>(modes.size()) != gs.dim) {
          validation_fail("initial.modes", "array length must equal grid.dim");
        }
        for (const auto& m : modes) init.modes.push_back(as_int(m, "initial.modes"));
      } else {
        init.modes.assign(static_cast<std::size_t>(gs.dim), as_int(modes, "initial.modes"));
      }
    } else {
      init.modes.assign(static_cast<std::size_t>(gs.dim), 1);
    }
    for (int m : init.modes) {
      if (m < 0) validation_fail("initial.modes", "mode counts must be nonnegative");
    }
  } else if (type == "explicit") {
    check_keys(obj, "initial", {"type", "u", "v", "w"});
    init.kind = InitialKind::Explicit;
    init.u_values = get_number_array(obj, "initial", "u");
    init.v_values = get_number_array(obj, "initial", "v");
    init.w_values = get_number_array(obj, "initial", "w");
    const int cells = gs.nx * gs.ny;
    check_cells(init.u_values, "u", cells);
    check_cells(init.v_values, "v", cells);
    check_cells(init.w_values, "w", cells);
  } else if (type == "random") {
    check_keys(obj, "initial", {"type", "amplitude"});
    init.kind = InitialKind::Random;
    init.amplitude = get_number_or(obj, "initial", "amplitude", 0.1);
    check_amplitude(init.amplitude);
  } else {
    validation_fail("initial.type",
                    "must be one of constant, equilibrium_perturbation, explicit, random");
  }
  return init;
}

AnalysisRequests parse_analysis(const json& obj, const GridSpec& gs) {
  check_keys(obj, "analysis", {"regime", "boundedness", "stability"});
  AnalysisRequests ar;
  ar.regime = get_bool_or(obj, "analysis", "regime", true);

  if (obj.contains("boundedness")) {
    const json& b = obj.at("boundedness");
    check_keys(b, "analysis.boundedness", {"dim", "p_exp", "C_p"});
    BoundednessRequest br;
    br.dim = get_int_or(b, "analysis.boundedness", "dim", gs.dim);
    if (br.dim < 1) validation_fail("analysis.boundedness.dim", "must be at least 1");
    br.p_exp = get_number_or(b, "analysis.boundedness", "p_exp", br.dim + 1.0);
    if (br.dim >= 3 && !(br.p_exp > br.dim)) {
      validation_fail("analysis.boundedness.p_exp", "must exceed dim");
    }
    if (b.contains("C_p")) {
      br.c_p = as_number(b.at("C_p"), "analysis.boundedness.C_p");
      br.c_p_defaulted = false;
      if (!(br.c_p > 0.0)) validation_fail("analysis.boundedness.C_p", "must be positive");
    }
    ar.boundedness = br;
  }

  if (obj.contains("stability")) {
    const json& st = obj.at("stability");
    check_keys(st, "analysis.stability", {"case"});
    const std::string c = get_string(st, "analysis.stability", "case");
    if (c == "weak") {
      ar.stability = StabilityCase::Weak;
    } else if (c == "asymmetric") {
      ar.stability = StabilityCase::Asymmetric;
    } else {
      validation_fail("analysis.stability.case", "must be weak or asymmetric");
    }
  }
  return ar;
}

}  // namespace

const char* to_string(ReferenceChoice r) {
  switch (r) {
    case ReferenceChoice::None:
      return "none";
    case ReferenceChoice::Coexistence:
      return "coexistence";
    case ReferenceChoice::SemiTrivial:
      return "semi_trivial";
  }
  return "none";
}

Grid make_grid(const GridSpec& gs) {
  if (gs.dim == 1) return make_grid_1d(gs.nx, gs.lx);
  if (gs.dim == 2) return make_grid_2d(gs.nx, gs.ny, gs.lx, gs.ly);
  throw ValidationError("grid.dim: must be 1 or 2");
}

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("document is not valid JSON: ") + e.what());
  }

  check_keys(doc, "",
             {"name", "params", "grid", "sim", "initial", "analysis", "reference",
              "require_certificate"});

  Scenario s;
  if (doc.contains("name")) {
    const json& n = doc.at("name");
    if (!n.is_string()) parse_fail("name", "must be a string");
    s.name = n.get<std::string>();
  }

  s.params = parse_params(member(doc, "", "params"));
  s.grid = parse_grid(member(doc, "", "grid"));

  // Grid and coefficient set describe the same domain.
  const Grid g = make_grid(s.grid);
  const double measure = g.measure();
  if (std::abs(measure - s.params.omega_measure) >
      1e-12 * std::max(std::abs(measure), std::abs(s.params.omega_measure))) {
    std::ostringstream msg;
    msg << "domain measure " << measure << " does not match params.omega_measure "
        << s.params.omega_measure;
    validation_fail("grid.L", msg.str());
  }

  s.sim = doc.contains("sim") ? parse_sim(doc.at("sim")) : SimConfig{};
  if (doc.contains("initial")) {
    s.initial = parse_initial(doc.at("initial"), s.grid);
  }
  if (doc.contains("analysis")) {
    s.analysis = parse_analysis(doc.at("analysis"), s.grid);
  }

  std::string ref = "auto";
  if (doc.contains("reference")) {
    const json& r = doc.at("reference");
    if (!r.is_string()) parse_fail("reference", "must be a string");
    ref = r.get<std::string>();
  }
  if (ref == "auto") {
    if (s.analysis.stability == StabilityCase::Weak) {
      s.reference = ReferenceChoice::Coexistence;
    } else if (s.analysis.stability == StabilityCase::Asymmetric) {
      s.reference = ReferenceChoice::SemiTrivial;
    } else {
      s.reference = ReferenceChoice::None;
    }
  } else if (ref == "none") {
    s.reference = ReferenceChoice::None;
  } else if (ref == "coexistence") {
    s.reference = ReferenceChoice::Coexistence;
  } else if (ref == "semi_trivial") {
    s.reference = ReferenceChoice::SemiTrivial;
  } else {
    validation_fail("reference", "must be auto, none, coexistence or semi_trivial");
  }

  s.require_certificate = get_bool_or(doc, "", "require_certificate", false);
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  json doc;
  doc["name"] = s.name;

  json& p = doc["params"];
  p["d1"] = s.params.d1;
  p["d2"] = s.params.d2;
  p["d3"] = s.params.d3;
  p["chi1"] = s.params.chi1;
  p["chi2"] = s.params.chi2;
  p["a0"] = s.params.a0;
  p["a1"] = s.params.a1;
  p["a2"] = s.params.a2;
  p["a3"] = s.params.a3;
  p["a4"] = s.params.a4;
  p["b0"] = s.params.b0;
  p["b1"] = s.params.b1;
  p["b2"] = s.params.b2;
  p["b3"] = s.params.b3;
  p["b4"] = s.params.b4;
  p["lambda"] = s.params.lambda;
  p["k"] = s.params.k;
  p["l"] = s.params.l;
  p["omega_measure"] = s.params.omega_measure;

  json& g = doc["grid"];
  g["dim"] = s.grid.dim;
  if (s.grid.dim == 1) {
    g["n"] = s.grid.nx;
    g["L"] = s.grid.lx;
  } else {
    g["n"] = json::array({s.grid.nx, s.grid.ny});
    g["L"] = json::array({s.grid.lx, s.grid.ly});
  }

  json& sim = doc["sim"];
  sim["dt_init"] = s.sim.dt_init;
  sim["t_end"] = s.sim.t_end;
  sim["dt_min"] = s.sim.dt_min;
  sim["safety"] = s.sim.safety;
  sim["blowup_threshold"] = s.sim.blowup_threshold;
  sim["record_every"] = s.sim.record_every;
  sim["convergence_tol"] = s.sim.convergence_tol;

  json& init = doc["initial"];
  switch (s.initial.kind) {
    case InitialKind::Constant:
      init["type"] = "constant";
      init["u"] = s.initial.u;
      init["v"] = s.initial.v;
      init["w"] = s.initial.w;
      break;
    case InitialKind::EquilibriumPerturbation:
      init["type"] = "equilibrium_perturbation";
      init["amplitude"] = s.initial.amplitude;
      init["modes"] = s.initial.modes;
      break;
    case InitialKind::Explicit:
      init["type"] = "explicit";
      init["u"] = s.initial.u_values;
      init["v"] = s.initial.v_values;
      init["w"] = s.initial.w_values;
      break;
    case InitialKind::Random:
      init["type"] = "random";
      init["amplitude"] = s.initial.amplitude;
      break;
  }

  json& an = doc["analysis"];
  an["regime"] = s.analysis.regime;
  if (s.analysis.boundedness) {
    json& b = an["boundedness"];
    b["dim"] = s.analysis.boundedness->dim;
    b["p_exp"] = s.analysis.boundedness->p_exp;
    if (!s.analysis.boundedness->c_p_defaulted) {
      b["C_p"] = s.analysis.boundedness->c_p;
    }
  }
  if (s.analysis.stability) {
    an["stability"]["case"] = to_string(*s.analysis.stability);
  }

  doc["reference"] = to_string(s.reference);
  doc["require_certificate"] = s.require_certificate;
  return doc.dump(2) + "\n";
}

namespace {

// Platform-independent uniform double in [-1, 1).
double symmetric_unit(std::mt19937_64& rng) {
  const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * x - 1.0;
}

Equilibrium reference_state(const Scenario& s) {
  try {
    switch (s.reference) {
      case ReferenceChoice::Coexistence:
        return coexistence_equilibrium(s.params);
      case ReferenceChoice::SemiTrivial:
        return semitrivial_equilibrium(s.params);
      case ReferenceChoice::None:
        break;
    }
  } catch (const Error& e) {
    throw ValidationError(std::string("initial: reference state unavailable: ") + e.what());
  }
  throw ValidationError("initial: this construction needs a reference state");
}

}  // namespace

SimState build_initial_state(const Scenario& s, std::uint64_t seed) {
  const Grid g = make_grid(s.grid);

  SimState state;
  state.t = 0.0;
  state.u = make_field(g);
  state.v = make_field(g);
  state.w = make_field(g);

  switch (s.initial.kind) {
    case InitialKind::Constant: {
      state.u.values.assign(state.u.values.size(), s.initial.u);
      state.v.values.assign(state.v.values.size(), s.initial.v);
      state.w.values.assign(state.w.values.size(), s.initial.w);
      break;
    }
    case InitialKind::EquilibriumPerturbation: {
      const Equilibrium eq = reference_state(s);
      const double pi = 3.14159265358979323846;
      for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
          double profile = std::cos(s.initial.modes[0] * pi * g.center_x(i) / g.Lx);
          if (g.dim == 2) {
            profile *= std::cos(s.initial.modes[1] * pi * g.center_y(j) / g.Ly);
          }
          const double factor = 1.0 + s.initial.amplitude * profile;
          const std::size_t idx = static_cast<std::size_t>(j) * g.nx + i;
          state.u.values[idx] = eq.u * factor;
          state.v.values[idx] = eq.v * factor;
          state.w.values[idx] = eq.w * factor;
        }
      }
      break;
    }
    case InitialKind::Explicit: {
      state.u.values = s.initial.u_values;
      state.v.values = s.initial.v_values;
      state.w.values = s.initial.w_values;
      break;
    }
    case InitialKind::Random: {
      const Equilibrium eq = reference_state(s);
      std::mt19937_64 rng(seed);
      for (double& c : state.u.values) c = eq.u * (1.0 + s.initial.amplitude * symmetric_unit(rng));
      for (double& c : state.v.values) c = eq.v * (1.0 + s.initial.amplitude * symmetric_unit(rng));
      for (double& c : state.w.values) c = eq.w * (1.0 + s.initial.amplitude * symmetric_unit(rng));
      break;
    }
  }

  for (const Field* f : {&state.u, &state.v, &state.w}) {
    for (double c : f->values) {
      if (!std::isfinite(c) || c < 0.0) {
        throw ValidationError("initial: produced a negative or non-finite cell");
      }
    }
  }
  return state;
}

}  // namespace chemolv

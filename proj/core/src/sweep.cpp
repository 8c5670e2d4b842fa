// Cartesian parameter sweeps: apply axis values to the serialized base
// scenario, re-validate, run every point, and render a deterministic CSV.
// Points execute concurrently; each row slot is owned by exactly one task.

#include "chemolv/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include <json.hpp>

#include "chemolv/errors.hpp"
#include "chemolv/presets.hpp"
#include "chemolv/runner.hpp"

namespace chemolv {

namespace {

using json = nlohmann::ordered_json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : path) {
    if (c == '.') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

// Walks a dotted path; digit tokens index arrays.  Returns nullptr when any
// hop is missing.
json* resolve_path(json& doc, const std::string& path) {
  json* node = &doc;
  for (const std::string& part : split_path(path)) {
    if (part.empty()) return nullptr;
    if (node->is_object()) {
      if (!node->contains(part)) return nullptr;
      node = &node->at(part);
    } else if (node->is_array()) {
      if (!std::all_of(part.begin(), part.end(),
                       [](unsigned char c) { return std::isdigit(c); })) {
        return nullptr;
      }
      const std::size_t idx = std::stoul(part);
      if (idx >= node->size()) return nullptr;
      node = &node->at(idx);
    } else {
      return nullptr;
    }
  }
  return node;
}

std::size_t point_count(const SweepSpec& spec) {
  std::size_t count = 1;
  for (const SweepAxis& a : spec.axes) count *= a.values.size();
  return count;
}

void check_spec(const SweepSpec& spec) {
  if (spec.max_points < 1) throw ValidationError("max_points: must be at least 1");
  json doc = json::parse(serialize_scenario(spec.base));
  for (std::size_t i = 0; i < spec.axes.size(); ++i) {
    const SweepAxis& a = spec.axes[i];
    const std::string where = "axes[" + std::to_string(i) + "]";
    if (a.values.empty()) throw ValidationError(where + ".values: must not be empty");
    const json* target = resolve_path(doc, a.path);
    if (target == nullptr || !target->is_number()) {
      throw ValidationError(where + ".path: '" + a.path +
                            "' does not name a numeric scalar in the scenario");
    }
  }
  if (point_count(spec) > static_cast<std::size_t>(spec.max_points)) {
    throw ValidationError("axes: cartesian size " + std::to_string(point_count(spec)) +
                          " exceeds max_points " + std::to_string(spec.max_points));
  }
}

// Margin columns are fixed by what the base scenario requests, so every row
// has the same shape regardless of per-point failures.
std::vector<std::string> margin_ids(const Scenario& base) {
  std::vector<std::string> ids;
  if (base.analysis.boundedness) {
    ids.push_back("local_dominance");
    if (base.analysis.boundedness->dim >= 3) {
      ids.push_back("u_crowding");
      ids.push_back("v_crowding");
    }
  }
  if (base.analysis.stability) {
    if (*base.analysis.stability == StabilityCase::Asymmetric) {
      ids.push_back("u_damping");
    }
    ids.push_back("signal_coupling");
    ids.push_back("damping_gap");
  }
  return ids;
}

double lookup_margin(const ScenarioRun& out, const std::string& id) {
  if (out.boundedness) {
    if (const ConditionRecord* c = out.boundedness->find(id)) return c->margin;
  }
  if (out.stability) {
    if (const ConditionRecord* c = out.stability->report.find(id)) return c->margin;
  }
  return kNaN;
}

double final_sup_distance(const Scenario& s, const ScenarioRun& out) {
  if (!out.final_state) return kNaN;
  const Equilibrium* ref = nullptr;
  if (s.reference == ReferenceChoice::Coexistence && out.coexistence) {
    ref = &*out.coexistence;
  } else if (s.reference == ReferenceChoice::SemiTrivial && out.semitrivial) {
    ref = &*out.semitrivial;
  }
  if (ref == nullptr) return kNaN;
  double m = 0.0;
  for (double x : out.final_state->u.values) m = std::max(m, std::abs(x - ref->u));
  for (double x : out.final_state->v.values) m = std::max(m, std::abs(x - ref->v));
  for (double x : out.final_state->w.values) m = std::max(m, std::abs(x - ref->w));
  return m;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

SweepSpec parse_sweep(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: must be an object");
  for (const auto& item : doc.items()) {
    const std::string& k = item.key();
    if (k != "base" && k != "base_preset" && k != "axes" && k != "max_points" &&
        k != "simulate") {
      throw ValidationError(k + ": unknown key");
    }
  }

  SweepSpec spec;
  const bool has_base = doc.contains("base");
  const bool has_preset = doc.contains("base_preset");
  if (has_base == has_preset) {
    throw ParseError("base: exactly one of base and base_preset is required");
  }
  if (has_base) {
    spec.base = parse_scenario(doc.at("base").dump());
  } else {
    const json& n = doc.at("base_preset");
    if (!n.is_string()) throw ParseError("base_preset: must be a string");
    spec.base = preset_scenario(n.get<std::string>());
  }

  if (doc.contains("axes")) {
    const json& axes = doc.at("axes");
    if (!axes.is_array()) throw ParseError("axes: must be an array");
    for (std::size_t i = 0; i < axes.size(); ++i) {
      const json& a = axes.at(i);
      const std::string where = "axes[" + std::to_string(i) + "]";
      if (!a.is_object()) throw ParseError(where + ": must be an object");
      for (const auto& item : a.items()) {
        if (item.key() != "path" && item.key() != "values") {
          throw ValidationError(where + "." + item.key() + ": unknown key");
        }
      }
      if (!a.contains("path") || !a.at("path").is_string()) {
        throw ParseError(where + ".path: must be a string");
      }
      if (!a.contains("values") || !a.at("values").is_array()) {
        throw ParseError(where + ".values: must be an array of numbers");
      }
      SweepAxis axis;
      axis.path = a.at("path").get<std::string>();
      for (const json& v : a.at("values")) {
        if (!v.is_number()) throw ParseError(where + ".values: must be an array of numbers");
        axis.values.push_back(v.get<double>());
      }
      spec.axes.push_back(std::move(axis));
    }
  }

  if (doc.contains("max_points")) {
    const json& m = doc.at("max_points");
    if (!m.is_number() || m.get<double>() != std::floor(m.get<double>())) {
      throw ParseError("max_points: must be an integer");
    }
    spec.max_points = m.get<int>();
  }
  if (doc.contains("simulate")) {
    const json& sim = doc.at("simulate");
    if (!sim.is_boolean()) throw ParseError("simulate: must be a boolean");
    spec.simulate = sim.get<bool>();
  }

  check_spec(spec);
  return spec;
}

SweepResult run_sweep(const SweepSpec& spec, std::uint64_t seed, int jobs) {
  check_spec(spec);

  const std::vector<std::string> ids = margin_ids(spec.base);
  SweepResult res;
  for (const SweepAxis& a : spec.axes) res.columns.push_back(a.path);
  res.columns.insert(res.columns.end(), {"regime", "r_low", "r_mid", "r_high"});
  for (const std::string& id : ids) res.columns.push_back("margin_" + id);
  if (spec.simulate) {
    res.columns.insert(res.columns.end(), {"outcome", "final_dist", "epsilon_hat"});
  }
  res.columns.push_back("error");

  const std::size_t count = point_count(spec);
  res.rows.resize(count);

  const std::string base_doc = serialize_scenario(spec.base);

  // Axis strides: first axis slowest.
  std::vector<std::size_t> strides(spec.axes.size(), 1);
  for (std::size_t a = spec.axes.size(); a-- > 1;) {
    strides[a - 1] = strides[a] * spec.axes[a].values.size();
  }

  auto run_point = [&](std::size_t idx) {
    SweepRow& row = res.rows[idx];
    row.r_low = row.r_mid = row.r_high = kNaN;
    row.margins.assign(ids.size(), kNaN);
    row.final_dist = kNaN;
    row.epsilon_hat = kNaN;

    for (std::size_t a = 0; a < spec.axes.size(); ++a) {
      row.values.push_back(
          spec.axes[a].values[(idx / strides[a]) % spec.axes[a].values.size()]);
    }

    try {
      json doc = json::parse(base_doc);
      for (std::size_t a = 0; a < spec.axes.size(); ++a) {
        *resolve_path(doc, spec.axes[a].path) = row.values[a];
      }
      const Scenario point = parse_scenario(doc.dump());

      const ScenarioRun out = run_scenario(point, spec.simulate, seed);
      row.regime = to_string(out.regime.regime);
      row.r_low = out.regime.r_low;
      row.r_mid = out.regime.r_mid;
      row.r_high = out.regime.r_high;
      for (std::size_t m = 0; m < ids.size(); ++m) {
        row.margins[m] = lookup_margin(out, ids[m]);
      }
      if (spec.simulate) {
        row.outcome = out.outcome ? to_string(*out.outcome) : "";
        row.final_dist = final_sup_distance(point, out);
        if (out.decay) row.epsilon_hat = out.decay->epsilon_hat.value_or(kNaN);
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  };

  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 2;
  std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs)
                                 : std::min<std::size_t>(hw, 8);
  workers = std::max<std::size_t>(1, std::min(workers, count));

  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) run_point(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count) return;
          run_point(i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }
  return res;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out;
  for (std::size_t i = 0; i < result.columns.size(); ++i) {
    if (i > 0) out += ",";
    out += result.columns[i];
  }
  out += "\n";

  const bool simulate =
      std::find(result.columns.begin(), result.columns.end(), "outcome") !=
      result.columns.end();

  for (const SweepRow& row : result.rows) {
    std::string line;
    for (double v : row.values) {
      line += fmt17(v);
      line += ",";
    }
    line += row.regime + "," + fmt17(row.r_low) + "," + fmt17(row.r_mid) + "," +
            fmt17(row.r_high);
    for (double m : row.margins) {
      line += ",";
      line += fmt17(m);
    }
    if (simulate) {
      line += "," + row.outcome + "," + fmt17(row.final_dist) + "," +
              fmt17(row.epsilon_hat);
    }
    line += "," + csv_escape(row.error) + "\n";
    out += line;
  }
  return out;
}

}  // namespace chemolv

#pragma once

#include <string>
#include <vector>

namespace chemolv {

// One scalar inequality "lhs > rhs" from a hypothesis set.  The margin is
// lhs - rhs, so positive margin means satisfied and the magnitude says by
// how much.
struct ConditionRecord {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  double margin = 0.0;
};

struct HypothesisReport {
  std::vector<ConditionRecord> conditions;
  bool overall = true;  // conjunction of all conditions

  // Appends lhs > rhs under the given id and folds it into `overall`.
  void add(std::string id, double lhs, double rhs);

  // Pointer to the condition with this id, or nullptr.
  const ConditionRecord* find(const std::string& id) const;
};

}  // namespace chemolv

#pragma once

#include <string>
#include <vector>

#include "chemolv/scenario.hpp"

namespace chemolv {

struct PresetInfo {
  std::string name;
  std::string summary;
};

// Built-in scenarios, in listing order.
std::vector<PresetInfo> preset_catalog();

// Scenario for a catalog name; throws ValidationError for unknown names.
Scenario preset_scenario(const std::string& name);

}  // namespace chemolv

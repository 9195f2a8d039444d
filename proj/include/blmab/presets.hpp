#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "blmab/scenario.hpp"

namespace blmab {

// A canned experiment: scenario parameters, the policies to compare, and
// optional one-dimensional sweeps.  A non-empty tenant_sweep (or alpha_sweep)
// means "run the whole experiment once per value".
struct Preset {
  std::string name;
  ScenarioConfig cfg;
  std::vector<std::string> policies;
  std::vector<int> tenant_sweep;
  std::vector<double> alpha_sweep;
  int default_seeds = 1;
};

const std::vector<std::string>& preset_names();

// Throws std::invalid_argument listing valid names on an unknown preset.
Preset preset_by_name(std::string_view name);

}  // namespace blmab

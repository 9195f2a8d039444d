#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "blmab/types.hpp"

namespace blmab {

// Full description of a simulated brokering scenario.  Everything needed to
// reproduce a run is either here or in the (master seed, run index) pair.
struct ScenarioConfig {
  // [scenario]
  int tenants = 10;
  int templates = 10;
  int capacity = 150;   // C, PRBs per round
  double alpha = 0.5;   // revenue/idle blend in the reward and cost model
  int horizon = 10000;  // T, rounds
  std::uint64_t seed = 1;  // scenario generation seed (templates, tenants)
  bool monitoring = true;

  // [traffic] per-tenant arrival rates drawn from Pareto(mean, std)
  double pareto_mean = 100.0;
  double pareto_std = 0.1;

  // [templates] R uniform on {r_min..r_max}, L uniform on {l_min..l_max}
  int r_min = 1;
  int r_max = 150;
  int l_min = 5;
  int l_max = 25;

  // [utilization]
  UtilModel util_model = UtilModel::uniform;
  double frac_min = 1.0;
  double frac_max = 1.0;

  // [policy]
  int batch = 6;            // K, admissions per round for the greedy learner
  double egreedy_b = 10.0;  // b in eps_t = min{1, b*|I|/(d^2 t)}
  double egreedy_d = 0.01;  // d, same schedule
  TieBreak tie_break = TieBreak::lowest_id;
  EucbSolver eucb_solver = EucbSolver::enumerate;

  // [optimum]
  int optimum_max_horizon = 2000;

  bool operator==(const ScenarioConfig&) const = default;
};

// Throws std::invalid_argument with a field-specific message on any
// out-of-range or inconsistent value.
void validate(const ScenarioConfig& cfg);

// Structured text round-trip.  The format is sectioned key = value pairs;
// serialize() emits every field, parse accepts partial files (missing keys
// keep their defaults) and rejects unknown sections/keys.
std::string serialize(const ScenarioConfig& cfg);
ScenarioConfig parse_scenario(std::istream& in);
ScenarioConfig parse_scenario_string(const std::string& text);
ScenarioConfig load_scenario_file(const std::string& path);

// A scenario with the per-seed-independent parts materialized: the template
// catalog and the tenant profiles, generated from cfg.seed.
struct Scenario {
  ScenarioConfig cfg;
  std::vector<SliceTemplate> catalog;
  std::vector<TenantProfile> tenants;
  bool rate_clamped = false;  // Pareto shape hit its cap during generation
};

Scenario materialize(const ScenarioConfig& cfg);

}  // namespace blmab

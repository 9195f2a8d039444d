#pragma once

#include <vector>

#include "blmab/broker.hpp"

namespace blmab {

// One simulated round.  rewards lines up with granted (a tenant that was
// granted but had nothing to run still appears, with reward 0); tenants
// outside the granted set earn nothing by definition and are not stored.
struct RoundRecord {
  std::vector<GrantEntry> granted;  // sorted by tenant id
  std::vector<double> rewards;      // parallel to granted
  double reward_sum = 0.0;
  double utilization = 0.0;  // sum of drawn usage across active slices / C
  int demand_sum = 0;        // sum of nominal slice sizes of active slices
  int cost_sum = 0;          // admission charges this round
  bool violation = false;    // actual usage exceeded the capacity

  bool contains_tenant(int tenant) const {
    for (const auto& g : granted)
      if (g.tenant == tenant) return true;
    return false;
  }

  bool operator==(const RoundRecord&) const = default;
};

struct SimulationTrace {
  int tenants = 0;
  int capacity = 0;
  std::vector<RoundRecord> rounds;
  std::vector<long long> pulls;  // per-tenant grant counts over the horizon
  double cumulative_reward = 0.0;
  double mean_utilization = 0.0;

  bool operator==(const SimulationTrace&) const = default;
};

}  // namespace blmab

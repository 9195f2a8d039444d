#pragma once

#include <vector>

#include "blmab/harness.hpp"
#include "blmab/scenario.hpp"
#include "blmab/trace.hpp"

namespace blmab {

struct OptimumResult {
  double total_reward = 0.0;
  // per-round grants, sorted by tenant; carried marks lock-up continuations
  std::vector<std::vector<GrantEntry>> schedule;
};

// Exact best-in-hindsight admission schedule for a recorded tape: which
// arrivals to serve so that cumulative reward is maximized while every round
// respects the budget and every admitted slice runs its full lock-up.
// Exponential in the worst case, so it refuses instances with more than five
// tenants or horizons past cfg.optimum_max_horizon.
OptimumResult hindsight_optimum(const Scenario& world, const Tape& tape);

// Replays a planner schedule against its tape and records the same per-round
// metrics a policy simulation would, so planner results aggregate and export
// through the identical pipeline.
SimulationTrace trace_of_plan(const Scenario& world, const Tape& tape,
                              const std::vector<std::vector<GrantEntry>>& plan);

}  // namespace blmab

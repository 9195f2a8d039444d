#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "blmab/harness.hpp"
#include "blmab/scenario.hpp"
#include "blmab/trace.hpp"

namespace blmab {

// One simulated run of one policy.
struct SeedOutcome {
  std::string policy;
  int run = 0;
  double cumulative_reward = 0.0;
  double mean_utilization = 0.0;
  double violation_rate = 0.0;     // fraction of overbooked rounds
  double multiplexing_gain = 0.0;  // mean over rounds of max(0, demand/C - 1)
  double wall_seconds = 0.0;
};

// Sample mean with a 95% normal half-width (1.96 * sd / sqrt(n)).
struct Estimate {
  double mean = 0.0;
  double ci_half_width = 0.0;
};

struct PolicySummary {
  std::string policy;
  int seeds = 0;
  bool ci_degenerate = false;  // a single run: CI width 0 by convention
  Estimate reward;
  Estimate utilization;
  Estimate violation_rate;
  Estimate multiplexing_gain;
  double mean_wall_seconds = 0.0;
  std::vector<double> selection_ratio;  // per tenant: granted rounds / horizon
  // 101 quantile points (p, value) of the pooled per-round distributions
  std::vector<std::pair<double, double>> reward_cdf;
  std::vector<std::pair<double, double>> utilization_cdf;
  std::vector<double> gain_series;  // per round, averaged over runs
};

struct ExperimentResult {
  ScenarioConfig cfg;
  std::vector<SliceTemplate> catalog;
  std::vector<SeedOutcome> per_seed;    // ordered by (policy, run)
  std::vector<PolicySummary> policies;  // one per requested policy, in order
};

// Called as each run of each policy finishes, e.g. to stream CSV rows out.
// Invocations are serialized but their order across runs is not fixed.
using TraceSink =
    std::function<void(const std::string& policy, int run, const SimulationTrace&)>;

// Runs every named policy over `seeds` independent runs of the scenario and
// aggregates.  All policies of a run share one recorded tape, so comparisons
// are paired; "optimum" resolves to the hindsight planner.  The reduction is
// deterministic regardless of `workers`.
ExperimentResult run_experiment(const Scenario& world,
                                const std::vector<std::string>& policies,
                                int seeds, int workers = 1,
                                const TraceSink& sink = {});

// Names accepted by run_experiment and the command line.
const std::vector<std::string>& known_policy_names();

}  // namespace blmab

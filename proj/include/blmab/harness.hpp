#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blmab/policies.hpp"
#include "blmab/scenario.hpp"
#include "blmab/trace.hpp"
#include "blmab/traffic.hpp"

namespace blmab {

// Round-indexed randomness replayed verbatim by every policy (and by the
// hindsight optimum) for one (scenario, run) pair: whether a request shows
// up, which template it asks for, and the utilization fraction any active
// slice would burn that round.  Arrivals that cannot be served the round
// they fire are lost, which keeps the replay state identical across
// policies and small enough for exhaustive search.
struct Tape {
  int tenants = 0;
  long long horizon = 0;
  std::vector<std::vector<char>> arrival;  // [tenant][round-1]
  std::vector<std::vector<int>> tmpl;      // [tenant][round-1]
  std::vector<std::vector<double>> frac;   // [tenant][round-1], in [0, 1]
};

Tape make_tape(const Scenario& world, int run);

// One policy run over one scenario.  Live mode drives the gap arrival
// process (requests persist until served or superseded); tape mode replays
// a Tape.  Rounds execute as: expire finished slices, collect arrivals,
// select, open lock-ups, draw utilization for the active slices, pay
// rewards, record.
class Simulation {
 public:
  Simulation(const Scenario& world, PolicyKind kind, int run);
  Simulation(const Scenario& world, PolicyKind kind, int run, const Tape* tape);

  void step();  // execute one round
  void run();   // execute every remaining round

  long long next_round() const { return t_; }
  const SimulationTrace& trace() const { return trace_; }
  const Policy& policy() const { return *policy_; }

 private:
  void train();
  double slice_reward(int resources, double lambda) const;

  Scenario world_;
  const Tape* tape_ = nullptr;
  int run_ = 0;
  std::unique_ptr<Policy> policy_;
  Rng traffic_rng_, util_rng_, policy_rng_;
  std::vector<GapArrivals> arrivals_;
  std::vector<std::optional<SliceRequest>> pending_;
  std::vector<long long> expiry_at_;  // round an expiry event fires, or 0
  SimulationTrace trace_;
  double util_sum_ = 0.0;
  long long t_ = 1;
};

SimulationTrace run_simulation(const Scenario& world, PolicyKind kind, int run);

// Bandit reduction: unit slices, unit lock-ups, capacity equal to the batch
// and full charging, so every learner admits exactly `batch` arms per round;
// granted arms pay exponential rewards drawn from the true means.  The
// resulting trace feeds the regret computation directly.
SimulationTrace run_bandit(const std::vector<double>& means, int batch,
                           long long horizon, std::uint64_t seed, int run,
                           PolicyKind kind);

}  // namespace blmab

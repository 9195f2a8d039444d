#pragma once

#include <vector>

#include "blmab/types.hpp"

namespace blmab {

// Admission cost in whole PRBs for a request of `requested` PRBs:
//   cost = ceil( requested * (1 - (1-alpha) * theta_bar) )
// theta_bar is the tenant's observed mean reward in [0,1].  A tenant whose
// granted slices kept earning (i.e. left PRBs idle) is charged less than it
// asks for, which is the over-provisioning lever: alpha = 1 always charges
// the full request, no history (theta_bar = 0) likewise.
int admission_cost(int requested, double alpha, double theta_bar);

// Exploration index: mean + sqrt(2 ln(round) / pulls).  Requires pulls >= 1
// and round >= 1; logs are natural.
double ucb_index(double mean, long long pulls, double round);

// Exploration schedule eps_t = min{1, b*n_arms / (d^2 * t)}.
double egreedy_epsilon(double b, double d, int n_arms, long long round);

struct GrantEntry {
  int tenant = 0;
  int cost = 0;         // PRBs charged against this round's budget
  bool carried = false; // true when forced in by an active lock-up

  bool operator==(const GrantEntry&) const = default;
};

struct RoundDecision {
  std::vector<GrantEntry> granted;  // ascending tenant id
  int total_cost() const;
  bool contains(int tenant) const;
};

// Mutable learning state of the broker: round counter, pull counts W,
// running mean rewards, and the lock-ups active in the current round
// (synced in by the simulation loop before each selection).
struct BrokerState {
  long long round = 0;  // 1-based during the horizon; 0 during training
  std::vector<double> means;
  std::vector<long long> pulls;
  std::vector<LockUp> lockups;
  int budget_spent = 0;

  explicit BrokerState(int tenants)
      : means(tenants, 0.0), pulls(tenants, 0) {}

  int tenants() const { return static_cast<int>(means.size()); }
  bool locked(int tenant) const;

  // Record one observed reward; keeps the running mean exact.
  void observe(int tenant, double reward);
};

}  // namespace blmab

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "blmab/broker.hpp"
#include "blmab/rng.hpp"
#include "blmab/types.hpp"

namespace blmab {

struct PolicyConfig {
  int tenants = 0;
  int capacity = 0;
  double alpha = 0.5;
  int batch = 1;            // K, admissions per round for the greedy learner
  double egreedy_b = 10.0;
  double egreedy_d = 0.01;
  TieBreak tie_break = TieBreak::lowest_id;
  EucbSolver eucb_solver = EucbSolver::enumerate;
  std::vector<SliceTemplate> catalog;
};

// A selection policy owns the broker's learning state for one run.  The
// simulation loop syncs the active lock-ups into state() each round, asks
// select() for the round's decision, then feeds observed rewards back via
// state().observe().
class Policy {
 public:
  explicit Policy(PolicyConfig cfg);
  virtual ~Policy() = default;

  virtual std::string_view name() const = 0;
  // Policies that seed each arm with one fictitious draw before round 1.
  virtual bool wants_training() const { return false; }

  BrokerState& state() { return state_; }
  const BrokerState& state() const { return state_; }
  const PolicyConfig& config() const { return cfg_; }

  // Decide the round's grants.  Lock-ups in state() are always granted
  // (carried) at their stored cost; fresh grants must keep the total cost
  // within capacity.  Deterministic given (state, pending, rng stream).
  RoundDecision select(const std::vector<SliceRequest>& pending, Rng& rng);

 protected:
  struct Fresh {
    int tenant = 0;
    int template_id = -1;   // -1 when the tenant has no pending request
    int cost = 0;
    int arrival_round = 0;
    bool idle = false;
  };

  // Baselines only react to actual requests; the learners also consider
  // idle tenants (a zero-cost grant that yields the no-request signal).
  virtual bool considers_idle_tenants() const { return true; }
  virtual void choose(std::vector<Fresh>& cands, RoundDecision& out, Rng& rng) = 0;

  void admit(const Fresh& f, RoundDecision& out);
  bool fits(const Fresh& f) const;
  // argmax over the still-open candidates; ties resolved per config
  int pick_best(const std::vector<Fresh>& cands, const std::vector<char>& open,
                const std::vector<double>& score, Rng& rng) const;

  PolicyConfig cfg_;
  BrokerState state_;
};

enum class PolicyKind { fcfs, random_order, egreedy, onets, eucb };

// Stable names used by the CLI, file outputs, and configs.
std::string_view policy_name(PolicyKind kind);
PolicyKind policy_kind_from_name(std::string_view name);

std::unique_ptr<Policy> make_policy(PolicyKind kind, PolicyConfig cfg);

}  // namespace blmab

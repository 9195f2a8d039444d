#include "blmab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "blmab/optimum.hpp"
#include "blmab/policies.hpp"

namespace blmab {

namespace {

constexpr const char* kOptimumName = "optimum";

// Everything a run contributes to the aggregates, kept per run so the final
// reduction can walk runs in order no matter which thread finished first.
struct RunSlice {
  SeedOutcome outcome;
  std::vector<double> round_rewards;
  std::vector<double> round_utils;
  std::vector<double> round_gains;
  std::vector<long long> pulls;
};

SimulationTrace trace_for(const Scenario& world, const std::string& policy,
                          int run, const Tape& tape) {
  if (policy == kOptimumName) {
    auto res = hindsight_optimum(world, tape);
    return trace_of_plan(world, tape, res.schedule);
  }
  Simulation sim(world, policy_kind_from_name(policy), run, &tape);
  sim.run();
  return sim.trace();
}

RunSlice digest(const Scenario& world, const std::string& policy, int run,
                const SimulationTrace& tr, double wall_seconds) {
  RunSlice s;
  s.outcome.policy = policy;
  s.outcome.run = run;
  s.outcome.cumulative_reward = tr.cumulative_reward;
  s.outcome.mean_utilization = tr.mean_utilization;
  s.outcome.wall_seconds = wall_seconds;
  const double cap = world.cfg.capacity;
  long long violations = 0;
  double gain_sum = 0.0;
  s.round_rewards.reserve(tr.rounds.size());
  s.round_utils.reserve(tr.rounds.size());
  s.round_gains.reserve(tr.rounds.size());
  for (const auto& rec : tr.rounds) {
    violations += rec.violation ? 1 : 0;
    const double gain = std::max(0.0, rec.demand_sum / cap - 1.0);
    gain_sum += gain;
    s.round_rewards.push_back(rec.reward_sum);
    s.round_utils.push_back(rec.utilization);
    s.round_gains.push_back(gain);
  }
  const double rounds = static_cast<double>(tr.rounds.size());
  s.outcome.violation_rate = violations / rounds;
  s.outcome.multiplexing_gain = gain_sum / rounds;
  s.pulls = tr.pulls;
  return s;
}

Estimate estimate_of(const std::vector<double>& xs) {
  Estimate e;
  const double n = static_cast<double>(xs.size());
  for (double x : xs) e.mean += x;
  e.mean /= n;
  if (xs.size() < 2) return e;  // width 0 by convention
  double ss = 0.0;
  for (double x : xs) ss += (x - e.mean) * (x - e.mean);
  e.ci_half_width = 1.96 * std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  return e;
}

std::vector<std::pair<double, double>> quantiles_of(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::vector<std::pair<double, double>> out;
  out.reserve(101);
  for (int k = 0; k <= 100; ++k) {
    const double p = k / 100.0;
    const auto idx = static_cast<std::size_t>(
        std::llround(p * static_cast<double>(xs.size() - 1)));
    out.emplace_back(p, xs[idx]);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& known_policy_names() {
  static const std::vector<std::string> names{"fcfs",  "random", "egreedy",
                                              "onets", "eucb",   "optimum"};
  return names;
}

ExperimentResult run_experiment(const Scenario& world,
                                const std::vector<std::string>& policies,
                                int seeds, int workers, const TraceSink& sink) {
  if (seeds < 1) throw std::invalid_argument("run_experiment: seeds must be >= 1");
  if (policies.empty())
    throw std::invalid_argument("run_experiment: no policies requested");
  for (const auto& p : policies) {
    const auto& known = known_policy_names();
    if (std::find(known.begin(), known.end(), p) == known.end()) {
      std::string msg = "run_experiment: unknown policy '" + p + "'; valid names:";
      for (const auto& k : known) msg += " " + k;
      throw std::invalid_argument(msg);
    }
  }
  validate(world.cfg);

  const int n_pol = static_cast<int>(policies.size());
  std::vector<std::vector<RunSlice>> slices(
      static_cast<std::size_t>(seeds));  // [run][policy]
  std::mutex sink_mu;
  std::atomic<int> next_run{0};
  std::exception_ptr first_error;
  std::mutex error_mu;

  auto work = [&]() {
    for (;;) {
      const int run = next_run.fetch_add(1);
      if (run >= seeds) return;
      try {
        const Tape tape = make_tape(world, run);
        auto& row = slices[run];
        row.resize(n_pol);
        for (int p = 0; p < n_pol; ++p) {
          const auto t0 = std::chrono::steady_clock::now();
          const SimulationTrace tr = trace_for(world, policies[p], run, tape);
          const double wall =
              std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
          row[p] = digest(world, policies[p], run, tr, wall);
          if (sink) {
            std::lock_guard<std::mutex> lk(sink_mu);
            sink(policies[p], run, tr);
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lk(error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const int n_threads = std::max(1, std::min(workers, seeds));
  if (n_threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  ExperimentResult out;
  out.cfg = world.cfg;
  out.catalog = world.catalog;
  const double horizon = static_cast<double>(world.cfg.horizon);
  for (int p = 0; p < n_pol; ++p) {
    PolicySummary sum;
    sum.policy = policies[p];
    sum.seeds = seeds;
    sum.ci_degenerate = seeds == 1;
    std::vector<double> rewards, utils, viols, gains;
    std::vector<double> pooled_rewards, pooled_utils;
    sum.selection_ratio.assign(world.cfg.tenants, 0.0);
    sum.gain_series.assign(static_cast<std::size_t>(world.cfg.horizon), 0.0);
    for (int run = 0; run < seeds; ++run) {
      const RunSlice& s = slices[run][p];
      out.per_seed.push_back(s.outcome);
      rewards.push_back(s.outcome.cumulative_reward);
      utils.push_back(s.outcome.mean_utilization);
      viols.push_back(s.outcome.violation_rate);
      gains.push_back(s.outcome.multiplexing_gain);
      sum.mean_wall_seconds += s.outcome.wall_seconds;
      pooled_rewards.insert(pooled_rewards.end(), s.round_rewards.begin(),
                            s.round_rewards.end());
      pooled_utils.insert(pooled_utils.end(), s.round_utils.begin(),
                          s.round_utils.end());
      for (int i = 0; i < world.cfg.tenants; ++i)
        sum.selection_ratio[i] += static_cast<double>(s.pulls[i]) / horizon;
      for (std::size_t t = 0; t < s.round_gains.size(); ++t)
        sum.gain_series[t] += s.round_gains[t];
    }
    sum.reward = estimate_of(rewards);
    sum.utilization = estimate_of(utils);
    sum.violation_rate = estimate_of(viols);
    sum.multiplexing_gain = estimate_of(gains);
    sum.mean_wall_seconds /= seeds;
    for (auto& r : sum.selection_ratio) r /= seeds;
    for (auto& g : sum.gain_series) g /= seeds;
    sum.reward_cdf = quantiles_of(std::move(pooled_rewards));
    sum.utilization_cdf = quantiles_of(std::move(pooled_utils));
    out.policies.push_back(std::move(sum));
  }
  return out;
}

}  // namespace blmab

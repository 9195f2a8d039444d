// Cross-seed aggregation: estimates, CDFs, pairing, worker independence.
#include "doctest.h"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "blmab/experiment.hpp"

using namespace blmab;

namespace {

ScenarioConfig exp_config() {
  ScenarioConfig cfg;
  cfg.tenants = 5;
  cfg.templates = 3;
  cfg.capacity = 100;
  cfg.alpha = 0.5;
  cfg.horizon = 300;
  cfg.seed = 17;
  cfg.pareto_mean = 1.0;
  cfg.pareto_std = 0.2;
  cfg.r_min = 20;
  cfg.r_max = 60;
  cfg.l_min = 1;
  cfg.l_max = 3;
  cfg.batch = 3;
  return cfg;
}

// Everything except wall-clock, which legitimately varies between runs.
void check_same_stats(const PolicySummary& a, const PolicySummary& b) {
  CHECK(a.seeds == b.seeds);
  CHECK(a.ci_degenerate == b.ci_degenerate);
  CHECK(a.reward.mean == b.reward.mean);
  CHECK(a.reward.ci_half_width == b.reward.ci_half_width);
  CHECK(a.utilization.mean == b.utilization.mean);
  CHECK(a.violation_rate.mean == b.violation_rate.mean);
  CHECK(a.multiplexing_gain.mean == b.multiplexing_gain.mean);
  CHECK(a.selection_ratio == b.selection_ratio);
  CHECK(a.reward_cdf == b.reward_cdf);
  CHECK(a.utilization_cdf == b.utilization_cdf);
  CHECK(a.gain_series == b.gain_series);
}

}  // namespace

TEST_CASE("a single seed yields degenerate zero-width intervals") {
  auto world = materialize(exp_config());
  auto res = run_experiment(world, {"onets"}, 1);
  REQUIRE(res.policies.size() == 1);
  CHECK(res.policies[0].ci_degenerate);
  CHECK(res.policies[0].reward.ci_half_width == 0.0);
  CHECK(res.policies[0].utilization.ci_half_width == 0.0);
  CHECK(res.per_seed.size() == 1);
  auto more = run_experiment(world, {"onets"}, 3);
  CHECK_FALSE(more.policies[0].ci_degenerate);
  CHECK(more.policies[0].reward.ci_half_width > 0.0);
}

TEST_CASE("the same policy listed twice aggregates identically") {
  auto world = materialize(exp_config());
  auto res = run_experiment(world, {"eucb", "eucb"}, 4);
  REQUIRE(res.policies.size() == 2);
  check_same_stats(res.policies[0], res.policies[1]);
  REQUIRE(res.per_seed.size() == 8);
  for (int run = 0; run < 4; ++run) {
    CHECK(res.per_seed[run].cumulative_reward ==
          res.per_seed[4 + run].cumulative_reward);
    CHECK(res.per_seed[run].violation_rate == res.per_seed[4 + run].violation_rate);
  }
}

TEST_CASE("the worker count never changes the aggregates") {
  auto world = materialize(exp_config());
  const std::vector<std::string> pols{"fcfs", "onets", "optimum"};
  auto serial = run_experiment(world, pols, 5, 1);
  auto pooled = run_experiment(world, pols, 5, 4);
  REQUIRE(serial.policies.size() == pooled.policies.size());
  for (std::size_t i = 0; i < serial.policies.size(); ++i)
    check_same_stats(serial.policies[i], pooled.policies[i]);
  for (std::size_t i = 0; i < serial.per_seed.size(); ++i) {
    CHECK(serial.per_seed[i].policy == pooled.per_seed[i].policy);
    CHECK(serial.per_seed[i].run == pooled.per_seed[i].run);
    CHECK(serial.per_seed[i].cumulative_reward ==
          pooled.per_seed[i].cumulative_reward);
  }
}

TEST_CASE("unknown policies and empty seed counts are rejected") {
  auto world = materialize(exp_config());
  CHECK_THROWS_WITH_AS(run_experiment(world, {"ucb1"}, 2),
                       doctest::Contains("valid names"), std::invalid_argument);
  CHECK_THROWS_AS(run_experiment(world, {"onets"}, 0), std::invalid_argument);
  CHECK_THROWS_AS(run_experiment(world, {}, 2), std::invalid_argument);
}

TEST_CASE("summary shapes: quantile grids, ratios and gain series") {
  auto world = materialize(exp_config());
  auto res = run_experiment(world, {"onets"}, 4);
  const auto& s = res.policies[0];
  REQUIRE(s.reward_cdf.size() == 101);
  REQUIRE(s.utilization_cdf.size() == 101);
  CHECK(s.reward_cdf.front().first == 0.0);
  CHECK(s.reward_cdf.back().first == 1.0);
  for (std::size_t k = 1; k < s.reward_cdf.size(); ++k) {
    CHECK(s.reward_cdf[k].second >= s.reward_cdf[k - 1].second);
    CHECK(s.utilization_cdf[k].second >= s.utilization_cdf[k - 1].second);
  }
  REQUIRE(s.selection_ratio.size() == 5);
  double ratio_sum = 0.0;
  for (double r : s.selection_ratio) {
    CHECK(r >= 0.0);
    CHECK(r <= 1.0);
    ratio_sum += r;
  }
  CHECK(ratio_sum > 0.0);
  CHECK(s.gain_series.size() == 300);
  CHECK(s.mean_wall_seconds > 0.0);
}

TEST_CASE("the sink sees every trace exactly once") {
  auto world = materialize(exp_config());
  std::set<std::pair<std::string, int>> seen;
  long long rounds = 0;
  auto res = run_experiment(world, {"fcfs", "random"}, 3, 2,
                            [&](const std::string& p, int run,
                                const SimulationTrace& tr) {
                              CHECK(seen.emplace(p, run).second);
                              rounds += static_cast<long long>(tr.rounds.size());
                            });
  CHECK(seen.size() == 6);
  CHECK(rounds == 6 * 300);
  CHECK(res.per_seed.size() == 6);
}

TEST_CASE("full charging keeps gain and violations at exactly zero") {
  auto cfg = exp_config();
  cfg.alpha = 1.0;
  cfg.pareto_mean = 50.0;  // saturated demand
  auto world = materialize(cfg);
  auto res = run_experiment(world, {"onets", "fcfs"}, 5);
  for (const auto& s : res.policies) {
    CHECK(s.violation_rate.mean == 0.0);
    CHECK(s.multiplexing_gain.mean == 0.0);
  }
  // loose charging under the same demand does overbook
  cfg.alpha = 0.1;
  auto loose = materialize(cfg);
  auto res2 = run_experiment(loose, {"onets"}, 5);
  CHECK(res2.policies[0].multiplexing_gain.mean > 0.0);
}

TEST_CASE("the planner tops every policy mean on shared tapes") {
  auto cfg = exp_config();
  cfg.horizon = 120;
  auto world = materialize(cfg);
  auto res = run_experiment(
      world, {"optimum", "fcfs", "random", "egreedy", "onets", "eucb"}, 4);
  const double best = res.policies[0].reward.mean;
  for (std::size_t i = 1; i < res.policies.size(); ++i)
    CHECK(best >= res.policies[i].reward.mean - 1e-9);
}

TEST_CASE("a learner beats blind selection on dense heterogeneous demand") {
  ScenarioConfig cfg;  // the reference parameter set
  cfg.tenants = 10;
  cfg.templates = 10;
  cfg.capacity = 150;
  cfg.alpha = 0.5;
  cfg.horizon = 10000;
  cfg.seed = 2026;
  cfg.pareto_mean = 100.0;
  cfg.pareto_std = 0.1;
  cfg.r_min = 10;
  cfg.r_max = 50;
  cfg.l_min = 1;
  cfg.l_max = 3;
  cfg.batch = 6;
  cfg.egreedy_b = 10.0;
  cfg.egreedy_d = 0.01;
  cfg.util_model = UtilModel::frac_spread;
  cfg.frac_min = 0.2;
  cfg.frac_max = 1.0;
  auto world = materialize(cfg);
  auto res = run_experiment(world, {"random", "onets"}, 100);
  const auto& rnd = res.policies[0];
  const auto& onets = res.policies[1];
  CHECK(onets.reward.mean > rnd.reward.mean);
}

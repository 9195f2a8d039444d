// Reward formula: pinned point values plus range/monotonicity properties.
#include "doctest.h"

#include <stdexcept>

#include "blmab/reward.hpp"
#include "blmab/rng.hpp"

using namespace blmab;

TEST_CASE("pinned reward values") {
  // no demand -> no payoff
  CHECK(compute_reward(0, 0, 150, 0.5) == doctest::Approx(0.0));
  // full capacity, fully used: only the revenue share survives
  CHECK(compute_reward(150, 150, 150, 0.5) == doctest::Approx(0.5));
  // 0.5*(50/150) + 0.5*(25/50)
  CHECK(compute_reward(50, 25, 150, 0.5) == doctest::Approx(0.4166667).epsilon(1e-6));
  // alpha extremes
  CHECK(compute_reward(50, 25, 150, 1.0) == doctest::Approx(50.0 / 150.0));
  CHECK(compute_reward(50, 25, 150, 0.0) == doctest::Approx(0.5));
}

TEST_CASE("unmonitored reward keeps only the revenue share") {
  CHECK(compute_reward_unmonitored(50, 150, 0.5) == doctest::Approx(0.5 * 50 / 150));
  CHECK(compute_reward_unmonitored(0, 150, 0.5) == doctest::Approx(0.0));
}

TEST_CASE("invalid arguments are rejected") {
  CHECK_THROWS_AS(compute_reward(10, 11, 150, 0.5), std::invalid_argument);   // used > requested
  CHECK_THROWS_AS(compute_reward(200, 10, 150, 0.5), std::invalid_argument);  // requested > capacity
  CHECK_THROWS_AS(compute_reward(10, -1, 150, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(compute_reward(-1, 0, 150, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(compute_reward(10, 5, 0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(compute_reward(10, 5, 150, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(compute_reward(10, 5, 150, -0.1), std::invalid_argument);
}

TEST_CASE("reward is bounded in [0,1] and decreasing in usage") {
  Rng rng(17);
  for (int i = 0; i < 20000; ++i) {
    double capacity = rng.uniform(1.0, 300.0);
    double requested = rng.uniform(0.0, capacity);
    double used = rng.uniform(0.0, requested);
    double alpha = rng.uniform01();
    double v = compute_reward(requested, used, capacity, alpha);
    REQUIRE(v >= 0.0);
    REQUIRE(v <= 1.0);
    if (requested > 0.0 && used > 0.5) {
      // strictly fewer used PRBs never pays less
      double v2 = compute_reward(requested, used * 0.5, capacity, alpha);
      REQUIRE(v2 >= v);
    }
  }
}

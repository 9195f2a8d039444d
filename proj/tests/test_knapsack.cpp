// Both exact solvers against an independent bitmask brute force.
#include "doctest.h"

#include <cmath>
#include <vector>

#include "blmab/knapsack.hpp"
#include "blmab/rng.hpp"

using namespace blmab;

namespace {

// Oracle: enumerate every subset directly.  Kept free of any library
// machinery on purpose.
double oracle_best_value(const std::vector<Candidate>& cands, int budget) {
  const int n = static_cast<int>(cands.size());
  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int cost = 0;
    double value = 0.0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        cost += cands[i].cost;
        value += cands[i].value;
      }
    if (cost <= budget && value > best) best = value;
  }
  return best;
}

double value_of(const std::vector<Candidate>& cands, const std::vector<int>& chosen) {
  double v = 0.0;
  for (int id : chosen)
    for (const auto& c : cands)
      if (c.tenant == id) v += c.value;
  return v;
}

int cost_of(const std::vector<Candidate>& cands, const std::vector<int>& chosen) {
  int v = 0;
  for (int id : chosen)
    for (const auto& c : cands)
      if (c.tenant == id) v += c.cost;
  return v;
}

}  // namespace

TEST_CASE("two cheap halves beat one expensive item") {
  std::vector<Candidate> cands{{1, 0.9, 10}, {2, 0.5, 5}, {3, 0.5, 5}};
  for (auto solve : {solve_instantaneous, solve_enumeration}) {
    auto r = solve(cands, 10);
    CHECK(r.chosen == std::vector<int>{2, 3});
    CHECK(r.value == doctest::Approx(1.0));
    CHECK(r.cost == 10);
  }
}

TEST_CASE("zero-cost positive-value candidates are always taken") {
  std::vector<Candidate> cands{{0, 0.2, 0}, {1, 0.9, 10}, {2, 0.0, 0}};
  for (auto solve : {solve_instantaneous, solve_enumeration}) {
    auto r = solve(cands, 5);
    CHECK(r.chosen == std::vector<int>{0});  // tenant 1 too costly, 2 worthless
    CHECK(r.value == doctest::Approx(0.2));
    CHECK(r.cost == 0);
  }
}

TEST_CASE("empty input and zero budget degenerate cleanly") {
  for (auto solve : {solve_instantaneous, solve_enumeration}) {
    auto r0 = solve({}, 10);
    CHECK(r0.chosen.empty());
    CHECK(r0.value == 0.0);
    auto r1 = solve({{0, 1.0, 3}}, 0);
    CHECK(r1.chosen.empty());
    auto r2 = solve({{0, 1.0, 3}, {1, 0.5, 0}}, 0);
    CHECK(r2.chosen == std::vector<int>{1});
  }
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(solve_instantaneous({{0, 1.0, 3}}, -1), std::invalid_argument);
  CHECK_THROWS_AS(solve_instantaneous({{0, -1.0, 3}}, 5), std::invalid_argument);
  CHECK_THROWS_AS(solve_instantaneous({{0, 1.0, -3}}, 5), std::invalid_argument);
  CHECK_THROWS_AS(solve_enumeration({{0, 1.0, -3}}, 5), std::invalid_argument);
}

TEST_CASE("random instances match the subset oracle") {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(rng.uniform_int(1, 12));
    int budget = static_cast<int>(rng.uniform_int(0, 60));
    std::vector<Candidate> cands;
    for (int i = 0; i < n; ++i)
      cands.push_back({i, rng.uniform(0.0, 1.0), static_cast<int>(rng.uniform_int(0, 25))});
    double want = oracle_best_value(cands, budget);
    for (auto solve : {solve_instantaneous, solve_enumeration}) {
      auto r = solve(cands, budget);
      REQUIRE(std::abs(r.value - want) < 1e-12);
      REQUIRE(r.cost <= budget);
      // reported totals are consistent with the reported set
      REQUIRE(value_of(cands, r.chosen) == doctest::Approx(r.value).epsilon(1e-12));
      REQUIRE(cost_of(cands, r.chosen) == r.cost);
    }
  }
}

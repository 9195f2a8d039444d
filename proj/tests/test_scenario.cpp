// Config parsing, validation, serialization round-trip, materialization.
#include "doctest.h"

#include <stdexcept>

#include "blmab/scenario.hpp"

using namespace blmab;

TEST_CASE("defaults validate and round-trip through the parser") {
  ScenarioConfig c;
  CHECK_NOTHROW(validate(c));
  ScenarioConfig back = parse_scenario_string(serialize(c));
  CHECK(back == c);
}

TEST_CASE("non-default values round-trip unchanged") {
  ScenarioConfig c;
  c.tenants = 5;
  c.templates = 3;
  c.capacity = 80;
  c.alpha = 0.3;
  c.horizon = 1234;
  c.seed = 99;
  c.monitoring = false;
  c.pareto_mean = 7.25;
  c.pareto_std = 1.5;
  c.r_min = 2;
  c.r_max = 40;
  c.l_min = 1;
  c.l_max = 9;
  c.util_model = UtilModel::frac_spread;
  c.frac_min = 0.25;
  c.frac_max = 0.75;
  c.batch = 2;
  c.egreedy_b = 0.5;
  c.egreedy_d = 0.9;
  c.tie_break = TieBreak::random;
  c.eucb_solver = EucbSolver::dp;
  c.optimum_max_horizon = 64;
  ScenarioConfig back = parse_scenario_string(serialize(c));
  CHECK(back == c);
}

TEST_CASE("partial files keep defaults, comments are ignored") {
  ScenarioConfig c = parse_scenario_string(
      "# comment\n"
      "[scenario]\n"
      "tenants = 4\n"
      "; another comment\n"
      "[policy]\n"
      "batch = 2\n");
  CHECK(c.tenants == 4);
  CHECK(c.batch == 2);
  CHECK(c.capacity == 150);  // default retained
}

TEST_CASE("parser rejects malformed input with line info") {
  CHECK_THROWS_WITH_AS(parse_scenario_string("[scenario]\nbogus = 1\n"),
                       doctest::Contains("unknown key"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_scenario_string("[nosuch]\n"),
                       doctest::Contains("unknown section"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_scenario_string("tenants = 4\n"),
                       doctest::Contains("outside any section"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_scenario_string("[scenario]\ntenants = four\n"),
                       doctest::Contains("expected an integer"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_scenario_string("[scenario]\ntenants\n"),
                       doctest::Contains("key = value"), std::invalid_argument);
}

TEST_CASE("validation rejects out-of-range fields") {
  auto broken = [](auto mutate) {
    ScenarioConfig c;
    mutate(c);
    return c;
  };
  CHECK_THROWS_AS(validate(broken([](auto& c) { c.tenants = 0; })), std::invalid_argument);
  CHECK_THROWS_AS(validate(broken([](auto& c) { c.alpha = 1.5; })), std::invalid_argument);
  CHECK_THROWS_AS(validate(broken([](auto& c) { c.horizon = 0; })), std::invalid_argument);
  CHECK_THROWS_AS(validate(broken([](auto& c) { c.r_max = c.capacity + 1; })),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(broken([](auto& c) { c.batch = c.tenants + 1; })),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(broken([](auto& c) { c.egreedy_d = 0.0; })), std::invalid_argument);
  CHECK_THROWS_AS(validate(broken([](auto& c) { c.pareto_std = 0.0; })), std::invalid_argument);
  CHECK_THROWS_AS(validate(broken([](auto& c) { c.frac_min = 0.0; })), std::invalid_argument);
}

TEST_CASE("materialize is deterministic in the scenario seed") {
  ScenarioConfig c;
  c.tenants = 6;
  c.templates = 4;
  Scenario a = materialize(c), b = materialize(c);
  CHECK(a.catalog == b.catalog);
  CHECK(a.tenants == b.tenants);
  c.seed = 2;
  Scenario d = materialize(c);
  CHECK(d.catalog != a.catalog);
}

TEST_CASE("materialized values respect the configured ranges") {
  ScenarioConfig c;
  c.tenants = 50;
  c.templates = 40;
  c.r_min = 10;
  c.r_max = 20;
  c.l_min = 3;
  c.l_max = 5;
  c.util_model = UtilModel::frac_spread;
  c.frac_min = 0.4;
  c.frac_max = 0.9;
  Scenario sc = materialize(c);
  for (const auto& t : sc.catalog) {
    CHECK(t.resources >= 10);
    CHECK(t.resources <= 20);
    CHECK(t.duration >= 3);
    CHECK(t.duration <= 5);
  }
  for (const auto& ten : sc.tenants) {
    CHECK(ten.arrival_rate > 0);
    CHECK(ten.util_max_frac >= 0.4);
    CHECK(ten.util_max_frac <= 0.9);
  }
}

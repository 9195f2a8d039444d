#include "blmab/knapsack.hpp"

#include <algorithm>
#include <stdexcept>

namespace blmab {

namespace {

void check_input(const std::vector<Candidate>& cands, int budget) {
  if (budget < 0) throw std::invalid_argument("knapsack: budget < 0");
  for (const auto& c : cands) {
    if (c.cost < 0) throw std::invalid_argument("knapsack: negative cost");
    if (c.value < 0) throw std::invalid_argument("knapsack: negative value");
  }
}

// Splits the input into free wins (cost 0, value > 0) and paid candidates
// worth solving for.  Free candidates belong to every optimum.
struct Prepared {
  std::vector<Candidate> paid;
  std::vector<int> free_tenants;
  double free_value = 0.0;
};

Prepared prepare(const std::vector<Candidate>& cands) {
  Prepared p;
  for (const auto& c : cands) {
    if (c.value == 0.0) continue;
    if (c.cost == 0) {
      p.free_tenants.push_back(c.tenant);
      p.free_value += c.value;
    } else {
      p.paid.push_back(c);
    }
  }
  return p;
}

KnapsackResult finish(Prepared&& p, std::vector<int>&& paid_chosen,
                      double paid_value, int paid_cost) {
  KnapsackResult r;
  r.chosen = std::move(p.free_tenants);
  r.chosen.insert(r.chosen.end(), paid_chosen.begin(), paid_chosen.end());
  std::sort(r.chosen.begin(), r.chosen.end());
  r.value = p.free_value + paid_value;
  r.cost = paid_cost;
  return r;
}

}  // namespace

KnapsackResult solve_instantaneous(const std::vector<Candidate>& cands,
                                   int budget) {
  check_input(cands, budget);
  Prepared p = prepare(cands);
  std::sort(p.paid.begin(), p.paid.end(),
            [](const Candidate& a, const Candidate& b) { return a.tenant < b.tenant; });

  const int n = static_cast<int>(p.paid.size());
  const int w = budget + 1;
  // dp[i][c] = best value achievable with items i..n-1 and budget c
  std::vector<double> dp(static_cast<std::size_t>(n + 1) * w, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    const auto& it = p.paid[i];
    for (int c = 0; c < w; ++c) {
      double skip = dp[(i + 1) * static_cast<std::size_t>(w) + c];
      double take = c >= it.cost
                        ? it.value + dp[(i + 1) * static_cast<std::size_t>(w) + c - it.cost]
                        : -1.0;
      dp[i * static_cast<std::size_t>(w) + c] = std::max(skip, take);
    }
  }
  std::vector<int> chosen;
  double value = 0.0;
  int cost = 0;
  int c = budget;
  for (int i = 0; i < n; ++i) {
    const auto& it = p.paid[i];
    if (c >= it.cost &&
        it.value + dp[(i + 1) * static_cast<std::size_t>(w) + c - it.cost] ==
            dp[i * static_cast<std::size_t>(w) + c]) {
      chosen.push_back(it.tenant);
      value += it.value;
      cost += it.cost;
      c -= it.cost;
    }
  }
  return finish(std::move(p), std::move(chosen), value, cost);
}

KnapsackResult solve_enumeration(const std::vector<Candidate>& cands,
                                 int budget) {
  check_input(cands, budget);
  Prepared p = prepare(cands);
  // lexicographic subset walk in tenant order; the only skipped branches are
  // budget-infeasible ones, so the work is genuinely exponential in the
  // candidate count, like the integer-program solve it stands in for
  std::sort(p.paid.begin(), p.paid.end(),
            [](const Candidate& a, const Candidate& b) { return a.tenant < b.tenant; });
  const int n = static_cast<int>(p.paid.size());

  std::vector<int> best, cur;
  double best_value = -1.0;
  int best_cost = 0;

  auto dfs = [&](auto&& self, int i, int room, double acc, int cost) -> void {
    if (i == n) {
      if (acc > best_value) {
        best_value = acc;
        best_cost = cost;
        best = cur;
      }
      return;
    }
    if (p.paid[i].cost <= room) {
      cur.push_back(p.paid[i].tenant);
      self(self, i + 1, room - p.paid[i].cost, acc + p.paid[i].value,
           cost + p.paid[i].cost);
      cur.pop_back();
    }
    self(self, i + 1, room, acc, cost);
  };
  dfs(dfs, 0, budget, 0.0, 0);

  return finish(std::move(p), std::move(best), best_value < 0 ? 0.0 : best_value,
                best_cost);
}

}  // namespace blmab

#pragma once

#include <vector>

namespace blmab {

// One admission candidate for the instantaneous selection problem.
struct Candidate {
  int tenant = 0;
  double value = 0.0;  // selection index to maximize
  int cost = 0;        // admission cost in whole PRBs
};

struct KnapsackResult {
  std::vector<int> chosen;  // tenant ids, ascending
  double value = 0.0;
  int cost = 0;
};

// Exact 0/1 knapsack over integer PRB weights: maximize total value subject
// to sum(cost) <= budget.  Values must be >= 0; zero-value candidates are
// never selected, zero-cost positive-value candidates always are.
// Dynamic program over the budget axis; reconstruction prefers including
// lower tenant ids among equal-value optima.
KnapsackResult solve_instantaneous(const std::vector<Candidate>& cands,
                                   int budget);

// Same contract, solved by exhaustive depth-first search over budget-feasible
// subsets in tenant order.  Exponential in the candidate count; kept as the
// production solver for the exact-selection policy because its cost growth
// with the tenant count mirrors the integer-program solve it stands in for.
KnapsackResult solve_enumeration(const std::vector<Candidate>& cands,
                                 int budget);

}  // namespace blmab

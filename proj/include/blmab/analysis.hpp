#pragma once

#include <vector>

#include "blmab/trace.hpp"

namespace blmab {

// True reward-distribution means, one per tenant; the reward family is the
// negative exponential parameterized by its mean, mu(theta) = theta.
struct RewardModel {
  std::vector<double> means;
};

struct RegretSeries {
  std::vector<double> cumulative;  // regret after round t, index t-1
  std::vector<long long> pulls;    // per-tenant grant counts at the horizon
};

// Relative entropy between exponential-by-mean distributions:
// H(theta_u, theta_v) = ln(theta_v/theta_u) + theta_u/theta_v - 1.
// Nonnegative, zero iff the means coincide.
double kl_exponential(double theta_u, double theta_v);

// Coefficient of ln(T) in the regret lower bound: sum over strictly
// sub-optimal arms of (kth-best mean - mean_i) / H(mean_i, kth-best mean).
// Arms tied with the kth best contribute nothing.
double regret_lower_bound(const std::vector<double>& means, int batch);

// Closed-form probability that arm `arm` lands in the top `batch` of one
// independent exponential draw per arm: an inclusion-exclusion sum over the
// subsets H (|H| < batch) of arms beating it and the power set of the rest.
// Multiplied by the horizon this bounds the expected pull count.  Refuses
// more than 15 arms (the subset sums grow as 3^n).
double expected_pulls_bound(const std::vector<double>& indices, int batch,
                            int arm);

// The same probability by adaptive quadrature of the order-statistics
// integral; serves as the closed form's independent cross-check.  Refuses
// more than 12 arms; an integral that fails to converge raises with the
// residual estimate in the message.
double expected_pulls_numeric(const std::vector<double>& indices, int batch,
                              int arm);

// Three-term tail bound on the probability that the epsilon-greedy schedule
// picks a sub-optimal arm at round t (t >= 2).  The raw value is reported as
// evaluated: it is vacuous (above 1, or hugely negative through the middle
// term) whenever t - 1 <= b*n/(d^2*sqrt(e)), i.e. before the schedule leaves
// the forced-exploration region.  clamped squeezes it into [0, 1].
struct EgreedyProb {
  double raw;
  double clamped;
};
EgreedyProb egreedy_suboptimal_prob(double b, double d, int n_arms,
                                    long long round);

// Cumulative regret of a trace against the best fixed batch of arms:
// R_t = t * (sum of the `batch` largest true means) - sum_i mean_i * W_i(t).
RegretSeries compute_regret(const SimulationTrace& trace,
                            const RewardModel& model, int batch);

}  // namespace blmab

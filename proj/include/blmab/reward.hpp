#pragma once

namespace blmab {

// Per-round reward of a granted slice.  Blends the broker revenue share
// (requested/capacity) with the tenant's unused fraction
// (requested-used)/requested, weighted by alpha in [0,1].  A granted slice
// that requested nothing yields 0.  Result is always in [0, 1] because
// 0 <= used <= requested <= capacity is enforced.
double compute_reward(double requested, double used, double capacity,
                      double alpha);

// Reward when per-slice usage monitoring is not available: only the revenue
// share term can be paid out.
double compute_reward_unmonitored(double requested, double capacity,
                                  double alpha);

}  // namespace blmab

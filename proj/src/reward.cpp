#include "blmab/reward.hpp"

#include <stdexcept>

namespace blmab {

namespace {

void check_common(double requested, double capacity, double alpha) {
  if (!(capacity > 0)) throw std::invalid_argument("reward: capacity must be > 0");
  if (alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("reward: alpha must lie in [0, 1]");
  if (requested < 0.0) throw std::invalid_argument("reward: requested < 0");
  if (requested > capacity)
    throw std::invalid_argument("reward: requested exceeds capacity");
}

}  // namespace

double compute_reward(double requested, double used, double capacity,
                      double alpha) {
  check_common(requested, capacity, alpha);
  if (used < 0.0) throw std::invalid_argument("reward: used < 0");
  if (used > requested)
    throw std::invalid_argument("reward: used exceeds requested");
  if (requested == 0.0) return 0.0;
  return alpha * (requested / capacity) +
         (1.0 - alpha) * ((requested - used) / requested);
}

double compute_reward_unmonitored(double requested, double capacity,
                                  double alpha) {
  check_common(requested, capacity, alpha);
  if (requested == 0.0) return 0.0;
  return alpha * (requested / capacity);
}

}  // namespace blmab

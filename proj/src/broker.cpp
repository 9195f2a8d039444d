#include "blmab/broker.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blmab {

int admission_cost(int requested, double alpha, double theta_bar) {
  if (requested < 0) throw std::invalid_argument("admission_cost: requested < 0");
  if (alpha < 0 || alpha > 1)
    throw std::invalid_argument("admission_cost: alpha outside [0, 1]");
  if (theta_bar < 0 || theta_bar > 1)
    throw std::invalid_argument("admission_cost: theta_bar outside [0, 1]");
  double c = requested * (1.0 - (1.0 - alpha) * theta_bar);
  int out = static_cast<int>(std::ceil(c - 1e-9));
  return std::clamp(out, 0, requested);
}

double ucb_index(double mean, long long pulls, double round) {
  if (pulls < 1) throw std::invalid_argument("ucb_index: pulls must be >= 1");
  if (round < 1) throw std::invalid_argument("ucb_index: round must be >= 1");
  return mean + std::sqrt(2.0 * std::log(round) / static_cast<double>(pulls));
}

double egreedy_epsilon(double b, double d, int n_arms, long long round) {
  if (!(b > 0)) throw std::invalid_argument("egreedy_epsilon: b must be > 0");
  if (!(d > 0) || d > 1)
    throw std::invalid_argument("egreedy_epsilon: d must lie in (0, 1]");
  if (n_arms < 1) throw std::invalid_argument("egreedy_epsilon: n_arms < 1");
  if (round < 1) throw std::invalid_argument("egreedy_epsilon: round < 1");
  return std::min(1.0, b * n_arms / (d * d * static_cast<double>(round)));
}

int RoundDecision::total_cost() const {
  int c = 0;
  for (const auto& g : granted) c += g.cost;
  return c;
}

bool RoundDecision::contains(int tenant) const {
  return std::any_of(granted.begin(), granted.end(),
                     [&](const GrantEntry& g) { return g.tenant == tenant; });
}

bool BrokerState::locked(int tenant) const {
  return std::any_of(lockups.begin(), lockups.end(), [&](const LockUp& l) {
    return l.tenant == tenant && l.remaining > 0;
  });
}

void BrokerState::observe(int tenant, double reward) {
  if (tenant < 0 || tenant >= tenants())
    throw std::invalid_argument("observe: tenant out of range");
  pulls[tenant] += 1;
  means[tenant] += (reward - means[tenant]) / static_cast<double>(pulls[tenant]);
}

}  // namespace blmab

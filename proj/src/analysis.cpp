#include "blmab/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace blmab {

namespace {

void check_arms(const std::vector<double>& indices, int batch, int arm,
                int max_arms, const char* who) {
  const int n = static_cast<int>(indices.size());
  if (n < 1) throw std::invalid_argument(std::string(who) + ": no arms");
  if (n > max_arms)
    throw std::invalid_argument(std::string(who) + ": more than " +
                                std::to_string(max_arms) + " arms refused");
  for (double v : indices)
    if (!(v > 0))
      throw std::invalid_argument(std::string(who) + ": indices must be > 0");
  if (batch < 1 || batch > n)
    throw std::invalid_argument(std::string(who) + ": batch outside [1, n]");
  if (arm < 0 || arm >= n)
    throw std::invalid_argument(std::string(who) + ": arm out of range");
}

// Adaptive Simpson with an accumulated error estimate.  The first few
// levels subdivide unconditionally: a near-zero stencil over a narrow bump
// would otherwise pass the error test without ever seeing the mass.
constexpr int kMaxDepth = 44;
constexpr int kForcedDepth = kMaxDepth - 5;

template <class F>
double adapt(const F& f, double a, double m, double b, double fa, double fm,
             double fb, double whole, double tol, int depth, double& residual) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = left + right - whole;
  if (depth <= 0 || (depth <= kForcedDepth && std::abs(err) <= 15.0 * tol)) {
    residual += std::abs(err) / 15.0;
    return left + right + err / 15.0;
  }
  return adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1, residual) +
         adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1, residual);
}

template <class F>
double integrate(const F& f, double a, double b, double tol, double& residual) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adapt(f, a, m, b, fa, fm, fb, whole, tol, kMaxDepth, residual);
}

// Enumerates subsets H of `others` with |H| <= batch-1, invoking fn(mask).
template <class Fn>
void for_each_small_subset(int others, int batch, const Fn& fn) {
  for (unsigned mask = 0; mask < (1u << others); ++mask)
    if (std::popcount(mask) < batch) fn(mask);
}

}  // namespace

double kl_exponential(double theta_u, double theta_v) {
  if (!(theta_u > 0) || !(theta_v > 0))
    throw std::invalid_argument("kl_exponential: means must be > 0");
  // ln(v/u) + u/v - 1 == d - log1p(d) with d = u/v - 1; this form stays
  // nonnegative under rounding for near-equal means
  const double d = (theta_u - theta_v) / theta_v;
  return d - std::log1p(d);
}

double regret_lower_bound(const std::vector<double>& means, int batch) {
  check_arms(means, batch, 0, 1 << 20, "regret_lower_bound");
  std::vector<double> sorted(means);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const double kth = sorted[batch - 1];
  double total = 0.0;
  for (double m : means)
    if (m < kth) total += (kth - m) / kl_exponential(m, kth);
  return total;
}

double expected_pulls_bound(const std::vector<double>& indices, int batch,
                            int arm) {
  check_arms(indices, batch, arm, 15, "expected_pulls_bound");
  const int n = static_cast<int>(indices.size());
  std::vector<double> inv_others;  // 1/theta of every arm but `arm`
  for (int j = 0; j < n; ++j)
    if (j != arm) inv_others.push_back(1.0 / indices[j]);
  const int m = n - 1;
  const double inv_i = 1.0 / indices[arm];

  double total = 0.0;
  for_each_small_subset(m, batch, [&](unsigned h_mask) {
    double h_sum = 0.0;
    for (int j = 0; j < m; ++j)
      if (h_mask & (1u << j)) h_sum += inv_others[j];
    // alternate over the power set of the arms in neither H nor {arm}
    std::vector<int> rest;
    for (int j = 0; j < m; ++j)
      if (!(h_mask & (1u << j))) rest.push_back(j);
    const unsigned r = static_cast<unsigned>(rest.size());
    for (unsigned phi = 0; phi < (1u << r); ++phi) {
      double p_sum = 0.0;
      for (unsigned j = 0; j < r; ++j)
        if (phi & (1u << j)) p_sum += inv_others[rest[j]];
      const double sign = (std::popcount(phi) & 1) ? -1.0 : 1.0;
      total += sign / (indices[arm] * (inv_i + h_sum + p_sum));
    }
  });
  return total;
}

double expected_pulls_numeric(const std::vector<double>& indices, int batch,
                              int arm) {
  check_arms(indices, batch, arm, 12, "expected_pulls_numeric");
  const int n = static_cast<int>(indices.size());
  std::vector<double> others;
  for (int j = 0; j < n; ++j)
    if (j != arm) others.push_back(indices[j]);
  const int m = n - 1;
  const double ti = indices[arm];

  double total = 0.0;
  double residual = std::exp(-50.0);
  for_each_small_subset(m, batch, [&](unsigned h_mask) {
    // the envelope decays at the joint rate of the density and the survival
    // factors, so the cutoff must scale with that rate, not the arm's alone
    double rate = 1.0 / ti;
    for (int j = 0; j < m; ++j)
      if (h_mask & (1u << j)) rate += 1.0 / others[j];
    const double hi = 50.0 / rate;
    // density of the arm's draw, times survival for every arm in H (they
    // beat it), times the CDF for every other arm (they do not)
    auto integrand = [&](double x) {
      double v = std::exp(-x / ti) / ti;
      for (int j = 0; j < m; ++j) {
        const double e = std::exp(-x / others[j]);
        v *= (h_mask & (1u << j)) ? e : 1.0 - e;
      }
      return v;
    };
    total += integrate(integrand, 0.0, hi, 1e-12, residual);
  });
  if (residual > 1e-8) {
    std::ostringstream os;
    os << "expected_pulls_numeric: quadrature failed to converge, residual "
       << residual;
    throw std::runtime_error(os.str());
  }
  return total;
}

EgreedyProb egreedy_suboptimal_prob(double b, double d, int n_arms,
                                    long long round) {
  if (!(b > 0))
    throw std::invalid_argument("egreedy_suboptimal_prob: b must be > 0");
  if (!(d > 0) || d > 1)
    throw std::invalid_argument(
        "egreedy_suboptimal_prob: d must lie in (0, 1]");
  if (n_arms < 1)
    throw std::invalid_argument("egreedy_suboptimal_prob: n_arms < 1");
  if (round < 2)
    throw std::invalid_argument("egreedy_suboptimal_prob: round must be >= 2");

  const double e = std::numbers::e;
  const double t = static_cast<double>(round);
  const double d2 = d * d;
  const double x = b * n_arms / ((t - 1.0) * d2 * std::sqrt(e));
  const double term1 = b / (d2 * t);
  const double term2 = 2.0 * (b / d2) * std::log(1.0 / x) * std::pow(x, b / (5.0 * d2));
  const double term3 = (4.0 * e / d2) * std::pow(x, b / 2.0);
  double raw = term1 + term2 + term3;
  // inf - inf when both powers overflow (x > 1 with extreme b): the larger
  // exponent wins, ties decided by the leading coefficients
  if (std::isnan(raw)) {
    const bool middle_wins =
        (b / (5.0 * d2) > b / 2.0) ||
        (b / (5.0 * d2) == b / 2.0 && 2.0 * b * std::log(x) >= 4.0 * e);
    raw = middle_wins ? -HUGE_VAL : HUGE_VAL;
  }
  return {raw, std::min(1.0, std::max(0.0, raw))};
}

RegretSeries compute_regret(const SimulationTrace& trace,
                            const RewardModel& model, int batch) {
  const int n = trace.tenants;
  if (static_cast<int>(model.means.size()) != n)
    throw std::invalid_argument("compute_regret: model size mismatch");
  check_arms(model.means, batch, 0, 1 << 20, "compute_regret");

  std::vector<double> sorted(model.means);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double benchmark = 0.0;
  for (int i = 0; i < batch; ++i) benchmark += sorted[i];

  RegretSeries out;
  out.pulls.assign(n, 0);
  out.cumulative.reserve(trace.rounds.size());
  double pulled_mass = 0.0;
  long long t = 0;
  for (const auto& round : trace.rounds) {
    ++t;
    for (const auto& g : round.granted) {
      if (g.tenant < 0 || g.tenant >= n)
        throw std::invalid_argument("compute_regret: tenant out of range");
      ++out.pulls[g.tenant];
      pulled_mass += model.means[g.tenant];
    }
    out.cumulative.push_back(static_cast<double>(t) * benchmark - pulled_mass);
  }
  return out;
}

}  // namespace blmab

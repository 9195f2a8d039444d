#include "blmab/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blmab {

namespace {
constexpr double kShapeCap = 1e6;
}

ParetoParams pareto_from_moments(double mean, double stddev) {
  if (!(mean > 0)) throw std::invalid_argument("pareto: mean must be > 0");
  if (!(stddev > 0)) throw std::invalid_argument("pareto: std must be > 0");
  double r = mean / stddev;
  ParetoParams p;
  p.shape = 1.0 + std::sqrt(1.0 + r * r);
  if (p.shape > kShapeCap) {
    p.shape = kShapeCap;
    p.clamped = true;
  }
  p.scale = mean * (p.shape - 1.0) / p.shape;
  return p;
}

std::vector<double> sample_arrival_rates(int count, double mean, double stddev,
                                         Rng& rng, bool* clamped) {
  if (count < 1) throw std::invalid_argument("arrival rates: count must be >= 1");
  ParetoParams p = pareto_from_moments(mean, stddev);
  if (clamped) *clamped = p.clamped;
  std::vector<double> rates(count);
  for (auto& r : rates) r = rng.pareto(p.shape, p.scale);
  return rates;
}

double sample_utilization(double granted, double max_frac, Rng& rng) {
  if (granted < 0) throw std::invalid_argument("utilization: granted < 0");
  if (max_frac < 0 || max_frac > 1)
    throw std::invalid_argument("utilization: max_frac must lie in [0, 1]");
  if (granted == 0) return 0.0;
  return rng.uniform(0.0, max_frac * granted);
}

GapArrivals::GapArrivals(double rate, int template_count, Rng& rng)
    : rate_(rate), template_count_(template_count), rng_(&rng) {
  if (!(rate > 0)) throw std::invalid_argument("arrivals: rate must be > 0");
  if (template_count < 1)
    throw std::invalid_argument("arrivals: template_count must be >= 1");
  next_arrival_ = draw_gap();
}

int GapArrivals::draw_gap() {
  return static_cast<int>(std::ceil(rng_->exponential_rate(rate_)));
}

std::optional<int> GapArrivals::step(int t, bool busy) {
  if (next_arrival_ > t) return std::nullopt;
  if (busy) {
    // inside an active window: suppress, restart the stream at expiry
    suppressed_ = true;
    return std::nullopt;
  }
  next_arrival_ += draw_gap();
  return static_cast<int>(rng_->uniform_int(0, template_count_ - 1));
}

void GapArrivals::on_expiry(int e) {
  if (suppressed_) {
    suppressed_ = false;
    next_arrival_ = e + draw_gap();
  }
}

std::vector<SliceRequest> generate_request_stream(
    const TenantProfile& profile, int horizon, int template_count,
    const std::vector<LockUp>& grant_history, Rng& rng) {
  if (horizon < 1) throw std::invalid_argument("request stream: horizon must be >= 1");
  GapArrivals arrivals(profile.arrival_rate, template_count, rng);
  std::vector<SliceRequest> out;
  for (int t = 1; t <= horizon; ++t) {
    bool busy = false;
    for (const auto& w : grant_history) {
      if (w.start_round + w.remaining == t) arrivals.on_expiry(t);
      if (t >= w.start_round && t < w.start_round + w.remaining) busy = true;
    }
    if (auto tpl = arrivals.step(t, busy)) {
      out.push_back(SliceRequest{profile.id, *tpl, t});
    }
  }
  return out;
}

}  // namespace blmab

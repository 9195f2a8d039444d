#pragma once

#include <optional>
#include <vector>

#include "blmab/rng.hpp"
#include "blmab/types.hpp"

namespace blmab {

// Pareto (type I) parameters recovered from a target mean/std pair.
// shape = 1 + sqrt(1 + (mean/std)^2) is always > 2, so both moments exist;
// nearly-degenerate std values are clamped at shape = 1e6 (clamped flag set).
struct ParetoParams {
  double shape = 0.0;
  double scale = 0.0;
  bool clamped = false;
};

ParetoParams pareto_from_moments(double mean, double stddev);

// Per-tenant arrival rates (requests per round).  Throws on count < 1 or a
// non-positive mean/std.  *clamped reports whether the shape cap was hit.
std::vector<double> sample_arrival_rates(int count, double mean, double stddev,
                                         Rng& rng, bool* clamped = nullptr);

// Used PRBs for one active round: uniform on [0, max_frac * granted].
// granted == 0 yields 0.
double sample_utilization(double granted, double max_frac, Rng& rng);

// Arrival state machine shared by the offline stream generator and the live
// harness.  Inter-arrival gaps are exponential in the tenant's rate, rounded
// up to whole rounds, so at most one arrival fires per round.  An arrival
// while a granted slice is active is suppressed and the stream restarts at
// the slice expiry with a fresh gap; any other arrival is a request (a newer
// request supersedes an unserved older one, since a tenant asks for one
// slice at a time; the caller tracks the pending request).
class GapArrivals {
 public:
  GapArrivals(double rate, int template_count, Rng& rng);

  // Advance to round t (strictly increasing calls).  busy = a granted slice
  // is active during t.  Returns the template id of an arrival firing at t.
  std::optional<int> step(int t, bool busy);

  // A slice covering this tenant expired at the start of round e.
  void on_expiry(int e);

 private:
  int draw_gap();
  double rate_;
  int template_count_;
  Rng* rng_;
  long long next_arrival_;
  bool suppressed_ = false;
};

// Offline request stream for a tenant given a fixed set of granted windows
// (each LockUp is a window [start_round, start_round + remaining)).  Returns
// the arrivals that became pending requests, in round order.  horizon >= 1.
std::vector<SliceRequest> generate_request_stream(
    const TenantProfile& profile, int horizon, int template_count,
    const std::vector<LockUp>& grant_history, Rng& rng);

}  // namespace blmab

#include "blmab/optimum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "blmab/broker.hpp"
#include "blmab/reward.hpp"

namespace blmab {

namespace {

// Per-tenant lock state packs into 9 bits (remaining:5, template:4), five
// tenants plus the round fit one 64-bit memo key.
constexpr int kMaxTenants = 5;
constexpr int kMaxRemaining = 31;
constexpr int kMaxTemplates = 16;

struct TenantState {
  int remaining = 0;  // rounds still owed, counting the current one
  int tmpl = 0;       // meaningful only while remaining > 0
};

struct Solver {
  const Scenario& world;
  const Tape& tape;
  int n;
  int horizon;
  std::vector<int> cost;             // per template, at the cheapest charge
  std::vector<std::vector<double>> eta;  // [i*templates+m][t], 1-based rounds
  std::vector<std::vector<double>> pre;  // prefix sums of eta, pre[ ][0]=0
  std::vector<std::vector<double>> ub_free;  // [i][t]: best budget-free value
  std::unordered_map<std::uint64_t, double> memo;

  Solver(const Scenario& w, const Tape& tp)
      : world(w), tape(tp), n(w.cfg.tenants), horizon(static_cast<int>(w.cfg.horizon)) {
    const int m_count = static_cast<int>(world.catalog.size());
    cost.resize(m_count);
    for (int m = 0; m < m_count; ++m)
      cost[m] = admission_cost(world.catalog[m].resources, world.cfg.alpha, 1.0);

    eta.assign(static_cast<std::size_t>(n) * m_count, {});
    pre.assign(static_cast<std::size_t>(n) * m_count, {});
    for (int i = 0; i < n; ++i)
      for (int m = 0; m < m_count; ++m) {
        auto& e = eta[static_cast<std::size_t>(i) * m_count + m];
        auto& p = pre[static_cast<std::size_t>(i) * m_count + m];
        e.assign(horizon + 1, 0.0);
        p.assign(horizon + 2, 0.0);
        const int r = world.catalog[m].resources;
        const double cap = world.tenants[i].util_max_frac;
        for (int t = 1; t <= horizon; ++t) {
          const double lam = tape.frac[i][t - 1] * cap * r;
          e[t] = world.cfg.monitoring
                     ? compute_reward(r, lam, world.cfg.capacity, world.cfg.alpha)
                     : compute_reward_unmonitored(r, world.cfg.capacity,
                                                  world.cfg.alpha);
          p[t] = p[t - 1] + e[t];
        }
        p[horizon + 1] = p[horizon];
      }

    // what each tenant could earn alone with no budget in the way; the sum
    // over tenants bounds any feasible continuation from above
    ub_free.assign(n, std::vector<double>(horizon + 2, 0.0));
    for (int i = 0; i < n; ++i)
      for (int t = horizon; t >= 1; --t) {
        double best = ub_free[i][t + 1];
        if (tape.arrival[i][t - 1]) {
          const int m = tape.tmpl[i][t - 1];
          const int end = std::min(t + world.catalog[m].duration - 1, horizon);
          const auto& p = pre[static_cast<std::size_t>(i) * m_count + m];
          best = std::max(best, p[end] - p[t - 1] + ub_free[i][end + 1]);
        }
        ub_free[i][t] = best;
      }
  }

  double eta_at(int i, int m, int t) const {
    return eta[static_cast<std::size_t>(i) * world.catalog.size() + m][t];
  }

  double tenant_bound(int i, int t, const TenantState& s) const {
    if (t > horizon) return 0.0;
    if (s.remaining == 0) return ub_free[i][t];
    const int end = std::min(t + s.remaining - 1, horizon);
    const auto& p = pre[static_cast<std::size_t>(i) * world.catalog.size() + s.tmpl];
    return p[end] - p[t - 1] + ub_free[i][end + 1];
  }

  static std::uint64_t key_of(int t, const std::vector<TenantState>& st) {
    std::uint64_t k = static_cast<std::uint64_t>(t);
    for (const auto& s : st) {
      k <<= 9;
      if (s.remaining > 0)
        k |= static_cast<std::uint64_t>(s.remaining) << 4 |
             static_cast<std::uint64_t>(s.tmpl);
    }
    return k;
  }

  struct Arrival {
    int tenant;
    int tmpl;
    int cost;
    int duration;
  };

  std::vector<Arrival> open_options(int t, const std::vector<TenantState>& st) const {
    std::vector<Arrival> v;
    for (int i = 0; i < n; ++i)
      if (st[i].remaining == 0 && tape.arrival[i][t - 1]) {
        const int m = tape.tmpl[i][t - 1];
        v.push_back({i, m, cost[m], world.catalog[m].duration});
      }
    return v;
  }

  double solve(int t, std::vector<TenantState>& st) {
    if (t > horizon) return 0.0;
    const std::uint64_t key = key_of(t, st);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int carried_cost = 0;
    double carried_reward = 0.0;
    for (int i = 0; i < n; ++i)
      if (st[i].remaining > 0) {
        carried_cost += cost[st[i].tmpl];
        carried_reward += eta_at(i, st[i].tmpl, t);
      }

    const auto options = open_options(t, st);
    double best = -1.0;
    std::vector<TenantState> child(n);
    for (unsigned mask = 0; mask < (1u << options.size()); ++mask) {
      int spend = carried_cost;
      double fresh_reward = 0.0;
      for (std::size_t j = 0; j < options.size(); ++j)
        if (mask & (1u << j)) {
          spend += options[j].cost;
          fresh_reward += eta_at(options[j].tenant, options[j].tmpl, t);
        }
      if (spend > world.cfg.capacity) continue;

      for (int i = 0; i < n; ++i) {
        child[i].remaining = st[i].remaining > 0 ? st[i].remaining - 1 : 0;
        child[i].tmpl = st[i].tmpl;
      }
      for (std::size_t j = 0; j < options.size(); ++j)
        if (mask & (1u << j)) {
          child[options[j].tenant].remaining = options[j].duration - 1;
          child[options[j].tenant].tmpl = options[j].tmpl;
        }

      const double here = carried_reward + fresh_reward;
      double bound = here;
      for (int i = 0; i < n; ++i) bound += tenant_bound(i, t + 1, child[i]);
      if (bound <= best) continue;  // cannot beat what we already have

      best = std::max(best, here + solve(t + 1, child));
    }
    memo.emplace(key, best);
    return best;
  }

  // Walk the solved tree again, taking the first subset that attains the
  // memoized value at every round.
  std::vector<std::vector<GrantEntry>> reconstruct() {
    std::vector<std::vector<GrantEntry>> plan(horizon);
    std::vector<TenantState> st(n), child(n);
    for (int t = 1; t <= horizon; ++t) {
      const double target = solve(t, st);
      int carried_cost = 0;
      double carried_reward = 0.0;
      for (int i = 0; i < n; ++i)
        if (st[i].remaining > 0) {
          carried_cost += cost[st[i].tmpl];
          carried_reward += eta_at(i, st[i].tmpl, t);
        }
      const auto options = open_options(t, st);
      bool found = false;
      for (unsigned mask = 0; mask < (1u << options.size()) && !found; ++mask) {
        int spend = carried_cost;
        double fresh_reward = 0.0;
        for (std::size_t j = 0; j < options.size(); ++j)
          if (mask & (1u << j)) {
            spend += options[j].cost;
            fresh_reward += eta_at(options[j].tenant, options[j].tmpl, t);
          }
        if (spend > world.cfg.capacity) continue;
        for (int i = 0; i < n; ++i) {
          child[i].remaining = st[i].remaining > 0 ? st[i].remaining - 1 : 0;
          child[i].tmpl = st[i].tmpl;
        }
        for (std::size_t j = 0; j < options.size(); ++j)
          if (mask & (1u << j)) {
            child[options[j].tenant].remaining = options[j].duration - 1;
            child[options[j].tenant].tmpl = options[j].tmpl;
          }
        double bound = carried_reward + fresh_reward;
        for (int i = 0; i < n; ++i) bound += tenant_bound(i, t + 1, child[i]);
        if (bound < target - 1e-9) continue;  // cannot reach the optimum
        const double value =
            carried_reward + fresh_reward + solve(t + 1, child);
        if (value >= target - 1e-9) {
          auto& out = plan[t - 1];
          for (int i = 0; i < n; ++i)
            if (st[i].remaining > 0)
              out.push_back({i, cost[st[i].tmpl], true});
          for (std::size_t j = 0; j < options.size(); ++j)
            if (mask & (1u << j))
              out.push_back({options[j].tenant, options[j].cost, false});
          std::sort(out.begin(), out.end(),
                    [](const GrantEntry& a, const GrantEntry& b) {
                      return a.tenant < b.tenant;
                    });
          st = child;
          found = true;
        }
      }
      if (!found)
        throw std::logic_error("hindsight_optimum: reconstruction lost the trail");
    }
    return plan;
  }
};

}  // namespace

OptimumResult hindsight_optimum(const Scenario& world, const Tape& tape) {
  const auto& cfg = world.cfg;
  validate(cfg);
  if (cfg.tenants > kMaxTenants)
    throw std::invalid_argument(
        "hindsight_optimum: refusing more than 5 tenants (exhaustive search)");
  if (cfg.horizon > cfg.optimum_max_horizon)
    throw std::invalid_argument(
        "hindsight_optimum: horizon exceeds optimum_max_horizon");
  if (tape.tenants != cfg.tenants || tape.horizon < cfg.horizon)
    throw std::invalid_argument("hindsight_optimum: tape does not cover the scenario");
  if (static_cast<int>(world.catalog.size()) > kMaxTemplates)
    throw std::invalid_argument("hindsight_optimum: too many templates to encode");
  for (const auto& tpl : world.catalog)
    if (tpl.duration > kMaxRemaining)
      throw std::invalid_argument("hindsight_optimum: lock-up too long to encode");

  Solver solver(world, tape);
  std::vector<TenantState> start(solver.n);
  OptimumResult out;
  out.total_reward = solver.solve(1, start);
  out.schedule = solver.reconstruct();
  return out;
}

SimulationTrace trace_of_plan(const Scenario& world, const Tape& tape,
                              const std::vector<std::vector<GrantEntry>>& plan) {
  const auto& cfg = world.cfg;
  if (static_cast<long long>(plan.size()) != cfg.horizon)
    throw std::invalid_argument("trace_of_plan: plan length != horizon");
  SimulationTrace tr;
  tr.tenants = cfg.tenants;
  tr.capacity = cfg.capacity;
  tr.pulls.assign(cfg.tenants, 0);
  std::vector<int> tmpl(cfg.tenants, -1);
  double util_sum = 0.0;
  for (long long t = 1; t <= cfg.horizon; ++t) {
    RoundRecord rec;
    rec.granted = plan[t - 1];
    double lambda_sum = 0.0;
    for (const auto& g : rec.granted) {
      if (!g.carried) tmpl[g.tenant] = tape.tmpl[g.tenant][t - 1];
      const auto& tp = world.catalog[tmpl[g.tenant]];
      const double lam = tape.frac[g.tenant][t - 1] *
                         world.tenants[g.tenant].util_max_frac * tp.resources;
      const double eta =
          cfg.monitoring
              ? compute_reward(tp.resources, lam, cfg.capacity, cfg.alpha)
              : compute_reward_unmonitored(tp.resources, cfg.capacity, cfg.alpha);
      rec.rewards.push_back(eta);
      rec.reward_sum += eta;
      rec.cost_sum += g.cost;
      rec.demand_sum += tp.resources;
      lambda_sum += lam;
      ++tr.pulls[g.tenant];
    }
    rec.utilization = lambda_sum / cfg.capacity;
    rec.violation = lambda_sum > static_cast<double>(cfg.capacity);
    util_sum += rec.utilization;
    tr.cumulative_reward += rec.reward_sum;
    tr.rounds.push_back(std::move(rec));
  }
  tr.mean_utilization = util_sum / static_cast<double>(cfg.horizon);
  return tr;
}

}  // namespace blmab

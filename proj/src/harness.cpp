#include "blmab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "blmab/reward.hpp"

namespace blmab {

Tape make_tape(const Scenario& world, int run) {
  const auto& cfg = world.cfg;
  Tape tape;
  tape.tenants = cfg.tenants;
  tape.horizon = cfg.horizon;
  Rng traffic(derive_seed(cfg.seed, run, Stream::traffic));
  Rng util(derive_seed(cfg.seed, run, Stream::utilization));
  tape.arrival.resize(cfg.tenants);
  tape.tmpl.resize(cfg.tenants);
  tape.frac.resize(cfg.tenants);
  for (int i = 0; i < cfg.tenants; ++i) {
    // a round carries a request iff the per-round arrival count is nonzero
    const double p = 1.0 - std::exp(-world.tenants[i].arrival_rate);
    tape.arrival[i].resize(cfg.horizon);
    tape.tmpl[i].resize(cfg.horizon);
    tape.frac[i].resize(cfg.horizon);
    for (long long t = 0; t < cfg.horizon; ++t) {
      tape.arrival[i][t] = traffic.uniform01() < p ? 1 : 0;
      tape.tmpl[i][t] =
          static_cast<int>(traffic.uniform_int(0, cfg.templates - 1));
      tape.frac[i][t] = util.uniform01();
    }
  }
  return tape;
}

namespace {

PolicyConfig policy_config_of(const Scenario& world) {
  const auto& cfg = world.cfg;
  PolicyConfig pc;
  pc.tenants = cfg.tenants;
  pc.capacity = cfg.capacity;
  pc.alpha = cfg.alpha;
  pc.batch = cfg.batch;
  pc.egreedy_b = cfg.egreedy_b;
  pc.egreedy_d = cfg.egreedy_d;
  pc.tie_break = cfg.tie_break;
  pc.eucb_solver = cfg.eucb_solver;
  pc.catalog = world.catalog;
  return pc;
}

}  // namespace

Simulation::Simulation(const Scenario& world, PolicyKind kind, int run)
    : Simulation(world, kind, run, nullptr) {}

Simulation::Simulation(const Scenario& world, PolicyKind kind, int run,
                       const Tape* tape)
    : world_(world),
      tape_(tape),
      run_(run),
      policy_(make_policy(kind, policy_config_of(world))),
      traffic_rng_(derive_seed(world.cfg.seed, run, Stream::traffic)),
      util_rng_(derive_seed(world.cfg.seed, run, Stream::utilization)),
      policy_rng_(derive_seed(world.cfg.seed, run, Stream::policy)),
      pending_(world.cfg.tenants),
      expiry_at_(world.cfg.tenants, 0) {
  validate(world_.cfg);
  if (tape_ && (tape_->tenants != world_.cfg.tenants ||
                tape_->horizon < world_.cfg.horizon))
    throw std::invalid_argument("Simulation: tape does not cover the scenario");
  if (!tape_) {
    arrivals_.reserve(world_.cfg.tenants);
    for (int i = 0; i < world_.cfg.tenants; ++i)
      arrivals_.emplace_back(world_.tenants[i].arrival_rate,
                             world_.cfg.templates, traffic_rng_);
  }
  trace_.tenants = world_.cfg.tenants;
  trace_.capacity = world_.cfg.capacity;
  trace_.pulls.assign(world_.cfg.tenants, 0);
  train();
}

double Simulation::slice_reward(int resources, double lambda) const {
  const auto& cfg = world_.cfg;
  return cfg.monitoring
             ? compute_reward(resources, lambda, cfg.capacity, cfg.alpha)
             : compute_reward_unmonitored(resources, cfg.capacity, cfg.alpha);
}

void Simulation::train() {
  if (!policy_->wants_training()) return;
  // one fictitious draw per arm ahead of round 1: pick a template the way a
  // granted tenant would and observe the resulting reward
  Rng rng(derive_seed(world_.cfg.seed, run_, Stream::training));
  for (int i = 0; i < world_.cfg.tenants; ++i) {
    const int tmpl =
        static_cast<int>(rng.uniform_int(0, world_.cfg.templates - 1));
    const int r = world_.catalog[tmpl].resources;
    const double lam =
        sample_utilization(r, world_.tenants[i].util_max_frac, rng);
    policy_->state().observe(i, slice_reward(r, lam));
  }
}

void Simulation::step() {
  const auto& cfg = world_.cfg;
  if (t_ > cfg.horizon)
    throw std::logic_error("Simulation::step: past the horizon");
  const int t = static_cast<int>(t_);
  auto& st = policy_->state();

  // expiry events fire at the start of the round after a slice's last one
  if (!tape_) {
    for (int i = 0; i < cfg.tenants; ++i)
      if (expiry_at_[i] == t_) {
        arrivals_[i].on_expiry(t);
        expiry_at_[i] = 0;
      }
  }

  // arrivals; in tape mode an unserved request does not linger
  if (tape_) {
    for (int i = 0; i < cfg.tenants; ++i) {
      pending_[i].reset();
      if (tape_->arrival[i][t - 1] && !st.locked(i))
        pending_[i] = SliceRequest{i, tape_->tmpl[i][t - 1], t};
    }
  } else {
    for (int i = 0; i < cfg.tenants; ++i) {
      const bool busy = st.locked(i);
      if (auto tmpl = arrivals_[i].step(t, busy); tmpl && !busy)
        pending_[i] = SliceRequest{i, *tmpl, t};  // supersedes an older one
    }
  }

  std::vector<SliceRequest> pending;
  for (const auto& p : pending_)
    if (p) pending.push_back(*p);

  st.round = t_;
  RoundDecision decision = policy_->select(pending, policy_rng_);

  // a fresh grant answering a real request opens its lock-up; an idle grant
  // has nothing to run
  for (const auto& g : decision.granted) {
    if (g.carried) continue;
    auto& p = pending_[g.tenant];
    if (!p) continue;
    const auto& tpl = world_.catalog[p->template_id];
    st.lockups.push_back({g.tenant, tpl.id, t, tpl.duration, g.cost});
    p.reset();
  }
  std::sort(st.lockups.begin(), st.lockups.end(),
            [](const LockUp& a, const LockUp& b) { return a.tenant < b.tenant; });

  // per-round usage of every active slice, drawn in tenant order
  RoundRecord rec;
  rec.granted = decision.granted;
  rec.cost_sum = decision.total_cost();
  double lambda_sum = 0.0;
  std::vector<int> active_r(cfg.tenants, 0);
  std::vector<double> active_lambda(cfg.tenants, -1.0);
  for (const auto& l : st.lockups) {
    const int r = world_.catalog[l.template_id].resources;
    const double cap = world_.tenants[l.tenant].util_max_frac;
    const double lam = tape_ ? tape_->frac[l.tenant][t - 1] * cap * r
                             : sample_utilization(r, cap, util_rng_);
    active_r[l.tenant] = r;
    active_lambda[l.tenant] = lam;
    lambda_sum += lam;
    rec.demand_sum += r;
  }

  for (const auto& g : decision.granted) {
    const double eta = active_lambda[g.tenant] >= 0.0
                           ? slice_reward(active_r[g.tenant],
                                          active_lambda[g.tenant])
                           : 0.0;
    st.observe(g.tenant, eta);
    rec.rewards.push_back(eta);
    rec.reward_sum += eta;
    ++trace_.pulls[g.tenant];
  }

  rec.utilization = lambda_sum / cfg.capacity;
  rec.violation = lambda_sum > static_cast<double>(cfg.capacity);
  util_sum_ += rec.utilization;
  trace_.cumulative_reward += rec.reward_sum;
  trace_.rounds.push_back(std::move(rec));
  trace_.mean_utilization = util_sum_ / static_cast<double>(trace_.rounds.size());

  // close out finished slices; their tenants are free from the next round
  for (auto it = st.lockups.begin(); it != st.lockups.end();) {
    if (--it->remaining == 0) {
      if (!tape_) expiry_at_[it->tenant] = t_ + 1;
      it = st.lockups.erase(it);
    } else {
      ++it;
    }
  }
  ++t_;
}

void Simulation::run() {
  while (t_ <= world_.cfg.horizon) step();
}

SimulationTrace run_simulation(const Scenario& world, PolicyKind kind, int run) {
  Simulation sim(world, kind, run);
  sim.run();
  return sim.trace();
}

SimulationTrace run_bandit(const std::vector<double>& means, int batch,
                           long long horizon, std::uint64_t seed, int run,
                           PolicyKind kind) {
  const int n = static_cast<int>(means.size());
  if (n < 1) throw std::invalid_argument("run_bandit: no arms");
  for (double m : means)
    if (!(m > 0))
      throw std::invalid_argument("run_bandit: means must be > 0");
  if (batch < 1 || batch > n)
    throw std::invalid_argument("run_bandit: batch outside [1, n]");
  if (horizon < 1 || horizon > (1LL << 31))
    throw std::invalid_argument("run_bandit: horizon out of range");

  PolicyConfig pc;
  pc.tenants = n;
  pc.capacity = batch;  // unit costs: exactly `batch` admissions fit
  pc.alpha = 1.0;
  pc.batch = batch;
  pc.catalog = {{0, 1, 1}};
  auto policy = make_policy(kind, pc);

  Rng reward_rng(derive_seed(seed, run, Stream::bandit));
  Rng policy_rng(derive_seed(seed, run, Stream::policy));
  if (policy->wants_training()) {
    Rng train_rng(derive_seed(seed, run, Stream::training));
    for (int i = 0; i < n; ++i)
      policy->state().observe(i, train_rng.exponential_mean(means[i]));
  }

  SimulationTrace trace;
  trace.tenants = n;
  trace.capacity = batch;
  trace.pulls.assign(n, 0);
  std::vector<SliceRequest> pending(n);
  for (int i = 0; i < n; ++i) pending[i] = {i, 0, 0};
  for (long long t = 1; t <= horizon; ++t) {
    for (auto& p : pending) p.arrival_round = static_cast<int>(t);
    policy->state().round = t;
    const RoundDecision d = policy->select(pending, policy_rng);
    RoundRecord rec;
    rec.granted = d.granted;
    rec.cost_sum = d.total_cost();
    for (const auto& g : d.granted) {
      const double x = reward_rng.exponential_mean(means[g.tenant]);
      policy->state().observe(g.tenant, x);
      rec.rewards.push_back(x);
      rec.reward_sum += x;
      ++trace.pulls[g.tenant];
    }
    trace.cumulative_reward += rec.reward_sum;
    trace.rounds.push_back(std::move(rec));
  }
  return trace;
}

}  // namespace blmab

#include "blmab/policies.hpp"

#include <algorithm>
#include <stdexcept>

#include "blmab/knapsack.hpp"

namespace blmab {

Policy::Policy(PolicyConfig cfg) : cfg_(std::move(cfg)), state_(cfg_.tenants) {
  if (cfg_.tenants < 1) throw std::invalid_argument("policy: tenants must be >= 1");
  if (cfg_.capacity < 1) throw std::invalid_argument("policy: capacity must be >= 1");
  if (cfg_.batch < 1 || cfg_.batch > cfg_.tenants)
    throw std::invalid_argument("policy: batch must lie in [1, tenants]");
  if (cfg_.catalog.empty()) throw std::invalid_argument("policy: empty catalog");
}

bool Policy::fits(const Fresh& f) const {
  return state_.budget_spent + f.cost <= cfg_.capacity;
}

void Policy::admit(const Fresh& f, RoundDecision& out) {
  out.granted.push_back(GrantEntry{f.tenant, f.cost, false});
  state_.budget_spent += f.cost;
}

int Policy::pick_best(const std::vector<Fresh>& cands,
                      const std::vector<char>& open,
                      const std::vector<double>& score, Rng& rng) const {
  int best = -1;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!open[i]) continue;
    if (best < 0 || score[i] > score[best]) best = static_cast<int>(i);
  }
  if (best < 0) return -1;
  if (cfg_.tie_break == TieBreak::random) {
    std::vector<int> ties;
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (open[i] && score[i] == score[best]) ties.push_back(static_cast<int>(i));
    if (ties.size() > 1)
      return ties[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<long long>(ties.size()) - 1))];
  }
  // candidates are in ascending tenant order, so the first max has lowest id
  return best;
}

RoundDecision Policy::select(const std::vector<SliceRequest>& pending, Rng& rng) {
  RoundDecision out;

  // lock-ups are non-negotiable: forced in at their admission cost
  int carried_cost = 0;
  for (const auto& l : state_.lockups) {
    if (l.remaining <= 0) continue;
    out.granted.push_back(GrantEntry{l.tenant, l.cost, true});
    carried_cost += l.cost;
  }
  if (carried_cost > cfg_.capacity)
    throw std::logic_error("policy: lock-up carryover exceeds capacity");
  state_.budget_spent = carried_cost;

  std::vector<char> has_pending(cfg_.tenants, 0);
  std::vector<Fresh> cands;
  for (const auto& r : pending) {
    if (r.tenant < 0 || r.tenant >= cfg_.tenants)
      throw std::invalid_argument("select: pending tenant out of range");
    if (r.template_id < 0 || r.template_id >= static_cast<int>(cfg_.catalog.size()))
      throw std::invalid_argument("select: pending template out of range");
    if (has_pending[r.tenant])
      throw std::invalid_argument("select: duplicate pending request for tenant");
    if (state_.locked(r.tenant))
      throw std::logic_error("select: pending request for a locked tenant");
    has_pending[r.tenant] = 1;
    Fresh f;
    f.tenant = r.tenant;
    f.template_id = r.template_id;
    // the forecast saturates at full usage; raw means can exceed 1 when the
    // broker is fed unbounded rewards
    f.cost = admission_cost(cfg_.catalog[r.template_id].resources, cfg_.alpha,
                            std::min(1.0, state_.means[r.tenant]));
    f.arrival_round = r.arrival_round;
    cands.push_back(f);
  }
  if (considers_idle_tenants()) {
    for (int i = 0; i < cfg_.tenants; ++i) {
      if (has_pending[i] || state_.locked(i)) continue;
      Fresh f;
      f.tenant = i;
      f.idle = true;
      cands.push_back(f);
    }
  }
  std::sort(cands.begin(), cands.end(),
            [](const Fresh& a, const Fresh& b) { return a.tenant < b.tenant; });

  choose(cands, out, rng);

  if (state_.budget_spent > cfg_.capacity)
    throw std::logic_error("policy: decision exceeded capacity");
  std::sort(out.granted.begin(), out.granted.end(),
            [](const GrantEntry& a, const GrantEntry& b) { return a.tenant < b.tenant; });
  return out;
}

namespace {

class FcfsPolicy final : public Policy {
 public:
  using Policy::Policy;
  std::string_view name() const override { return "fcfs"; }

 protected:
  bool considers_idle_tenants() const override { return false; }
  void choose(std::vector<Fresh>& cands, RoundDecision& out, Rng&) override {
    std::stable_sort(cands.begin(), cands.end(), [](const Fresh& a, const Fresh& b) {
      if (a.arrival_round != b.arrival_round) return a.arrival_round < b.arrival_round;
      return a.tenant < b.tenant;
    });
    for (const auto& f : cands)
      if (fits(f)) admit(f, out);
  }
};

class RandomPolicy final : public Policy {
 public:
  using Policy::Policy;
  std::string_view name() const override { return "random"; }

 protected:
  bool considers_idle_tenants() const override { return false; }
  void choose(std::vector<Fresh>& cands, RoundDecision& out, Rng& rng) override {
    rng.shuffle(cands);
    for (const auto& f : cands)
      if (fits(f)) admit(f, out);
  }
};

class EGreedyPolicy final : public Policy {
 public:
  using Policy::Policy;
  std::string_view name() const override { return "egreedy"; }

 protected:
  void choose(std::vector<Fresh>& cands, RoundDecision& out, Rng& rng) override {
    std::vector<char> open(cands.size(), 1);
    std::vector<double> mean_score(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i)
      mean_score[i] = state_.means[cands[i].tenant];
    std::size_t left = cands.size();
    while (left > 0) {
      double eps = egreedy_epsilon(cfg_.egreedy_b, cfg_.egreedy_d, cfg_.tenants,
                                   std::max<long long>(state_.round, 1));
      int pick;
      if (rng.uniform01() < eps) {
        long long k = rng.uniform_int(0, static_cast<long long>(left) - 1);
        pick = -1;
        for (std::size_t i = 0; i < cands.size(); ++i) {
          if (!open[i]) continue;
          if (k-- == 0) {
            pick = static_cast<int>(i);
            break;
          }
        }
      } else {
        pick = pick_best(cands, open, mean_score, rng);
      }
      open[pick] = 0;
      --left;
      if (fits(cands[pick])) admit(cands[pick], out);
    }
  }
};

class OnetsPolicy final : public Policy {
 public:
  using Policy::Policy;
  std::string_view name() const override { return "onets"; }
  bool wants_training() const override { return true; }

 protected:
  void choose(std::vector<Fresh>& cands, RoundDecision& out, Rng& rng) override {
    // carried lock-ups count toward the K admissions (but are never dropped)
    int admitted = static_cast<int>(out.granted.size());
    std::vector<char> open(cands.size(), 1);
    std::vector<double> index(cands.size());
    long long t = std::max<long long>(state_.round, 1);
    for (std::size_t i = 0; i < cands.size(); ++i)
      index[i] = ucb_index(state_.means[cands[i].tenant],
                           state_.pulls[cands[i].tenant], t);
    std::size_t left = cands.size();
    while (admitted < cfg_.batch && left > 0) {
      int pick = pick_best(cands, open, index, rng);
      open[pick] = 0;
      --left;
      if (fits(cands[pick])) {
        admit(cands[pick], out);
        ++admitted;
      }
    }
  }
};

class EucbPolicy final : public Policy {
 public:
  using Policy::Policy;
  std::string_view name() const override { return "eucb"; }
  bool wants_training() const override { return true; }

 protected:
  void choose(std::vector<Fresh>& cands, RoundDecision& out, Rng&) override {
    long long t = std::max<long long>(state_.round, 1);
    std::vector<Candidate> items;
    items.reserve(cands.size());
    for (const auto& f : cands)
      items.push_back(Candidate{
          f.tenant, ucb_index(state_.means[f.tenant], state_.pulls[f.tenant], t),
          f.cost});
    int residual = cfg_.capacity - state_.budget_spent;
    KnapsackResult sol = cfg_.eucb_solver == EucbSolver::dp
                             ? solve_instantaneous(items, residual)
                             : solve_enumeration(items, residual);
    for (const auto& f : cands)
      if (std::find(sol.chosen.begin(), sol.chosen.end(), f.tenant) != sol.chosen.end())
        admit(f, out);
  }
};

}  // namespace

std::string_view policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::fcfs: return "fcfs";
    case PolicyKind::random_order: return "random";
    case PolicyKind::egreedy: return "egreedy";
    case PolicyKind::onets: return "onets";
    case PolicyKind::eucb: return "eucb";
  }
  throw std::logic_error("policy_name: bad kind");
}

PolicyKind policy_kind_from_name(std::string_view name) {
  if (name == "fcfs") return PolicyKind::fcfs;
  if (name == "random") return PolicyKind::random_order;
  if (name == "egreedy") return PolicyKind::egreedy;
  if (name == "onets") return PolicyKind::onets;
  if (name == "eucb") return PolicyKind::eucb;
  throw std::invalid_argument("unknown policy name: " + std::string(name));
}

std::unique_ptr<Policy> make_policy(PolicyKind kind, PolicyConfig cfg) {
  switch (kind) {
    case PolicyKind::fcfs: return std::make_unique<FcfsPolicy>(std::move(cfg));
    case PolicyKind::random_order: return std::make_unique<RandomPolicy>(std::move(cfg));
    case PolicyKind::egreedy: return std::make_unique<EGreedyPolicy>(std::move(cfg));
    case PolicyKind::onets: return std::make_unique<OnetsPolicy>(std::move(cfg));
    case PolicyKind::eucb: return std::make_unique<EucbPolicy>(std::move(cfg));
  }
  throw std::logic_error("make_policy: bad kind");
}

}  // namespace blmab

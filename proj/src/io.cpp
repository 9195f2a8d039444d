#include "blmab/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace blmab {

std::string double_text(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc())
    throw std::runtime_error("double_text: value not representable");
  return std::string(buf, res.ptr);
}

std::string csv_of_trace(const SimulationTrace& trace) {
  std::string out = "round,granted_ids,reward_sum,utilization,cost_sum,violation\n";
  for (std::size_t t = 0; t < trace.rounds.size(); ++t) {
    const auto& rec = trace.rounds[t];
    out += std::to_string(t + 1);
    out += ',';
    for (std::size_t k = 0; k < rec.granted.size(); ++k) {
      if (k) out += '|';
      out += std::to_string(rec.granted[k].tenant + 1);
    }
    out += ',';
    out += double_text(rec.reward_sum);
    out += ',';
    out += double_text(rec.utilization);
    out += ',';
    out += std::to_string(rec.cost_sum);
    out += ',';
    out += rec.violation ? '1' : '0';
    out += '\n';
  }
  return out;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_of_estimate(const Estimate& e) {
  return ordered_json{{"mean", e.mean}, {"ci95_half_width", e.ci_half_width}};
}

ordered_json json_of_config(const ScenarioConfig& c) {
  ordered_json j;
  j["tenants"] = c.tenants;
  j["templates"] = c.templates;
  j["capacity"] = c.capacity;
  j["alpha"] = c.alpha;
  j["horizon"] = c.horizon;
  j["seed"] = c.seed;
  j["monitoring"] = c.monitoring;
  j["pareto_mean"] = c.pareto_mean;
  j["pareto_std"] = c.pareto_std;
  j["r_min"] = c.r_min;
  j["r_max"] = c.r_max;
  j["l_min"] = c.l_min;
  j["l_max"] = c.l_max;
  j["util_model"] = c.util_model == UtilModel::frac_spread ? "frac_spread" : "uniform";
  j["frac_min"] = c.frac_min;
  j["frac_max"] = c.frac_max;
  j["batch"] = c.batch;
  j["egreedy_b"] = c.egreedy_b;
  j["egreedy_d"] = c.egreedy_d;
  j["tie_break"] = c.tie_break == TieBreak::random ? "random" : "lowest_id";
  j["eucb_solver"] = c.eucb_solver == EucbSolver::dp ? "dp" : "enumerate";
  j["optimum_max_horizon"] = c.optimum_max_horizon;
  return j;
}

}  // namespace

std::string json_of_experiment(const ExperimentResult& result) {
  ordered_json j;
  j["scenario"] = json_of_config(result.cfg);
  j["catalog"] = ordered_json::array();
  for (const auto& tpl : result.catalog)
    j["catalog"].push_back(ordered_json{{"id", tpl.id + 1},
                                        {"resources", tpl.resources},
                                        {"duration", tpl.duration}});
  j["policies"] = ordered_json::array();
  for (const auto& s : result.policies) {
    ordered_json p;
    p["policy"] = s.policy;
    p["seeds"] = s.seeds;
    p["ci_degenerate"] = s.ci_degenerate;
    p["reward"] = json_of_estimate(s.reward);
    p["utilization"] = json_of_estimate(s.utilization);
    p["violation_rate"] = json_of_estimate(s.violation_rate);
    p["multiplexing_gain"] = json_of_estimate(s.multiplexing_gain);
    p["mean_wall_seconds"] = s.mean_wall_seconds;
    p["selection_ratio"] = s.selection_ratio;
    auto cdf = [](const std::vector<std::pair<double, double>>& pts) {
      ordered_json arr = ordered_json::array();
      for (const auto& [q, v] : pts) arr.push_back(ordered_json::array({q, v}));
      return arr;
    };
    p["reward_cdf"] = cdf(s.reward_cdf);
    p["utilization_cdf"] = cdf(s.utilization_cdf);
    p["gain_series"] = s.gain_series;
    j["policies"].push_back(std::move(p));
  }
  j["per_seed"] = ordered_json::array();
  for (const auto& o : result.per_seed)
    j["per_seed"].push_back(ordered_json{{"policy", o.policy},
                                         {"run", o.run},
                                         {"cumulative_reward", o.cumulative_reward},
                                         {"mean_utilization", o.mean_utilization},
                                         {"violation_rate", o.violation_rate},
                                         {"multiplexing_gain", o.multiplexing_gain},
                                         {"wall_seconds", o.wall_seconds}});
  return j.dump(2) + "\n";
}

std::string trace_csv_name(const std::string& policy, int run) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d", run);
  return policy + "_seed" + buf + ".csv";
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace blmab

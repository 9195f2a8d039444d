#include "blmab/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "blmab/analysis.hpp"
#include "blmab/experiment.hpp"
#include "blmab/io.hpp"
#include "blmab/presets.hpp"

namespace blmab {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int env_workers() {
  const char* v = std::getenv("BLMAB_WORKERS");
  if (!v) return 1;
  const int n = std::atoi(v);
  return n >= 1 ? n : 1;
}

struct RunOptions {
  std::string scenario_path;
  std::string preset_name;
  std::string policies_csv;
  std::string out_dir = "out";
  int seeds = 0;  // 0: preset default (or 10 for plain scenarios)
  std::uint64_t master_seed = 0;
  bool master_seed_set = false;
  int workers = 0;  // 0: BLMAB_WORKERS or 1
  bool summary_only = false;
};

void print_summary(const ExperimentResult& res) {
  std::printf("%-8s %6s %14s %12s %10s %12s %10s %11s\n", "policy", "seeds",
              "reward", "ci95", "util", "viol_rate", "mux_gain", "ms/round");
  for (const auto& s : res.policies) {
    const double ms_per_round =
        1e3 * s.mean_wall_seconds / static_cast<double>(res.cfg.horizon);
    std::printf("%-8s %6d %14.4f %12.4f %10.4f %12.6f %10.4f %11.4f\n",
                s.policy.c_str(), s.seeds, s.reward.mean, s.reward.ci_half_width,
                s.utilization.mean, s.violation_rate.mean,
                s.multiplexing_gain.mean, ms_per_round);
  }
}

struct Variant {
  std::string label;   // e.g. "I=5" or "alpha=0.3"; empty for a single run
  std::string subdir;  // e.g. "I5" or "alpha0.3"
  ScenarioConfig cfg;
};

std::vector<Variant> variants_of(const Preset& preset, const ScenarioConfig& base) {
  std::vector<Variant> out;
  if (!preset.tenant_sweep.empty()) {
    for (int count : preset.tenant_sweep) {
      Variant v;
      v.cfg = base;
      v.cfg.tenants = count;
      // a batch wider than the arm set is meaningless; clamp per variant
      v.cfg.batch = std::min(v.cfg.batch, count);
      v.label = "I=" + std::to_string(count);
      v.subdir = "I" + std::to_string(count);
      out.push_back(std::move(v));
    }
  } else if (!preset.alpha_sweep.empty()) {
    for (double a : preset.alpha_sweep) {
      Variant v;
      v.cfg = base;
      v.cfg.alpha = a;
      v.label = "alpha=" + double_text(a);
      v.subdir = "alpha" + double_text(a);
      out.push_back(std::move(v));
    }
  } else {
    out.push_back({"", "", base});
  }
  return out;
}

int cmd_run(const RunOptions& opt) {
  Preset preset;  // empty when running a plain scenario file
  ScenarioConfig cfg;
  if (opt.preset_name.empty() && opt.scenario_path.empty())
    throw std::invalid_argument("run: one of --scenario or --preset is required");
  if (!opt.preset_name.empty()) {
    preset = preset_by_name(opt.preset_name);
    cfg = preset.cfg;
  } else {
    cfg = load_scenario_file(opt.scenario_path);
  }
  if (opt.master_seed_set) cfg.seed = opt.master_seed;

  std::vector<std::string> policies = opt.policies_csv.empty()
                                          ? preset.policies
                                          : split_list(opt.policies_csv);
  if (policies.empty())
    policies = {"fcfs", "random", "egreedy", "onets", "eucb"};
  int seeds = opt.seeds;
  if (seeds == 0) seeds = preset.policies.empty() ? 10 : preset.default_seeds;
  const int workers = opt.workers > 0 ? opt.workers : env_workers();

  const fs::path out_root(opt.out_dir);
  fs::create_directories(out_root);

  ordered_json sweep_rows = ordered_json::array();
  for (const auto& variant : variants_of(preset, cfg)) {
    const fs::path out_dir =
        variant.subdir.empty() ? out_root : out_root / variant.subdir;
    fs::create_directories(out_dir);
    validate(variant.cfg);
    const Scenario world = materialize(variant.cfg);
    if (world.rate_clamped)
      std::fprintf(stderr,
                   "note: arrival-rate spread hit the Pareto shape cap; rates "
                   "are nearly constant\n");

    TraceSink sink;
    if (!opt.summary_only)
      sink = [&out_dir](const std::string& policy, int run,
                        const SimulationTrace& tr) {
        write_file(out_dir / trace_csv_name(policy, run), csv_of_trace(tr));
      };
    const ExperimentResult res = run_experiment(world, policies, seeds, workers, sink);
    write_file(out_dir / "summary.json", json_of_experiment(res));

    if (!variant.label.empty()) std::printf("--- %s ---\n", variant.label.c_str());
    print_summary(res);
    for (const auto& s : res.policies)
      sweep_rows.push_back(ordered_json{
          {"variant", variant.label},
          {"policy", s.policy},
          {"reward_mean", s.reward.mean},
          {"reward_ci95", s.reward.ci_half_width},
          {"utilization_mean", s.utilization.mean},
          {"violation_rate_mean", s.violation_rate.mean},
          {"violation_rate_ci95", s.violation_rate.ci_half_width},
          {"multiplexing_gain_mean", s.multiplexing_gain.mean},
          {"multiplexing_gain_ci95", s.multiplexing_gain.ci_half_width},
          {"mean_wall_seconds", s.mean_wall_seconds}});
  }
  if (sweep_rows.size() > policies.size())
    write_file(out_root / "sweep.json", sweep_rows.dump(2) + "\n");
  return 0;
}

struct BoundsOptions {
  std::vector<double> means;
  int batch = 1;
  double b = 10.0;
  double d = 0.01;
  double t_min = 100.0;
  double t_max = 1e6;
  int t_samples = 13;
  std::string json_path;
};

int cmd_bounds(const BoundsOptions& opt) {
  const int n = static_cast<int>(opt.means.size());
  if (n > 15)
    throw std::invalid_argument(
        "bounds: at most 15 arms (the per-arm selection probability "
        "enumerates subsets)");
  const double lb = regret_lower_bound(opt.means, opt.batch);
  std::printf("arms: %d, batch: %d\n", n, opt.batch);
  std::printf("regret lower-bound coefficient (x ln T): %s\n",
              double_text(lb).c_str());

  std::printf("per-arm selection probability (top-%d membership):\n", opt.batch);
  double sum = 0.0;
  ordered_json arms = ordered_json::array();
  for (int i = 0; i < n; ++i) {
    const double p = expected_pulls_bound(opt.means, opt.batch, i);
    sum += p;
    std::printf("  arm %2d: mean %s -> p = %s\n", i + 1,
                double_text(opt.means[i]).c_str(), double_text(p).c_str());
    arms.push_back(ordered_json{{"arm", i + 1}, {"mean", opt.means[i]}, {"p", p}});
  }
  std::printf("  sum = %s (must equal the batch size)\n", double_text(sum).c_str());

  ordered_json curve = ordered_json::array();
  std::printf("exploration-failure bound (b=%s, d=%s, %d arms):\n",
              double_text(opt.b).c_str(), double_text(opt.d).c_str(), n);
  const double lo = std::max(2.0, opt.t_min);
  const double hi = std::max(lo, opt.t_max);
  const int samples = std::max(2, opt.t_samples);
  for (int k = 0; k < samples; ++k) {
    const double frac = static_cast<double>(k) / (samples - 1);
    const double t = lo * std::pow(hi / lo, frac);
    const auto pr = egreedy_suboptimal_prob(opt.b, opt.d, n, t);
    std::printf("  t = %12.1f: raw %s, clamped %s\n", t,
                double_text(pr.raw).c_str(), double_text(pr.clamped).c_str());
    curve.push_back(
        ordered_json{{"t", t}, {"raw", pr.raw}, {"clamped", pr.clamped}});
  }

  if (!opt.json_path.empty()) {
    ordered_json j;
    j["arms"] = opt.means;
    j["batch"] = opt.batch;
    j["regret_lower_bound_coefficient"] = lb;
    j["selection_probability"] = arms;
    j["egreedy_curve"] = curve;
    write_file(opt.json_path, j.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Budgeted lock-up bandit simulator for network-slice brokering"};
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "run an experiment and export its data");
  auto* scenario_flag =
      run->add_option("--scenario", run_opt.scenario_path, "scenario config file");
  run->add_option("--preset", run_opt.preset_name,
                  "canned experiment: smoke, fig2, fig3, fig4, fig5, fig6")
      ->excludes(scenario_flag);
  run->add_option("--policies", run_opt.policies_csv,
                  "comma list: fcfs,random,egreedy,onets,eucb,optimum");
  run->add_option("--seeds", run_opt.seeds, "independent runs per policy");
  run->add_option("--out", run_opt.out_dir, "output directory");
  run->add_option("--master-seed", run_opt.master_seed, "override the scenario seed");
  run->add_flag("--summary-only", run_opt.summary_only,
                "skip the per-run CSV files");
  run->add_option("--workers", run_opt.workers,
                  "worker threads (default: BLMAB_WORKERS or 1)");

  BoundsOptions bounds_opt;
  auto* bounds =
      app.add_subcommand("bounds", "evaluate the analytical bound calculators");
  bounds->add_option("--means", bounds_opt.means, "arm means (comma list)")
      ->required()
      ->delimiter(',');
  bounds->add_option("--batch", bounds_opt.batch, "arms granted per round");
  bounds->add_option("--b", bounds_opt.b, "exploration schedule numerator");
  bounds->add_option("--d", bounds_opt.d, "exploration schedule gap parameter");
  bounds->add_option("--t-min", bounds_opt.t_min, "curve start round");
  bounds->add_option("--t-max", bounds_opt.t_max, "curve end round");
  bounds->add_option("--t-samples", bounds_opt.t_samples, "curve sample count");
  bounds->add_option("--json", bounds_opt.json_path, "also write the values as JSON");

  try {
    app.parse(argc, argv);
    bool master_set = run->count("--master-seed") > 0;
    run_opt.master_seed_set = master_set;
    if (run->parsed()) return cmd_run(run_opt);
    if (bounds->parsed()) return cmd_bounds(bounds_opt);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace blmab

#include "blmab/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "blmab/traffic.hpp"

namespace blmab {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  std::ostringstream os;
  os << "scenario config, line " << line << ": " << msg;
  throw std::invalid_argument(os.str());
}

long long parse_int(const std::string& v, int line) {
  long long out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size())
    fail(line, "expected an integer, got '" + v + "'");
  return out;
}

double parse_double(const std::string& v, int line) {
  try {
    std::size_t used = 0;
    double out = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("");
    return out;
  } catch (...) {
    fail(line, "expected a number, got '" + v + "'");
  }
}

bool parse_bool(const std::string& v, int line) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  fail(line, "expected a boolean, got '" + v + "'");
}

std::string fmt(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);  // shortest form
  if (ec != std::errc())
    throw std::invalid_argument("scenario config: unrepresentable number");
  return std::string(buf, end);
}

}  // namespace

void validate(const ScenarioConfig& c) {
  auto bad = [](const std::string& m) { throw std::invalid_argument("scenario: " + m); };
  if (c.tenants < 1) bad("tenants must be >= 1");
  if (c.templates < 1) bad("templates must be >= 1");
  if (c.capacity < 1) bad("capacity must be >= 1");
  if (c.alpha < 0 || c.alpha > 1) bad("alpha must lie in [0, 1]");
  if (c.horizon < 1) bad("horizon must be >= 1");
  if (!(c.pareto_mean > 0)) bad("pareto_mean must be > 0");
  if (!(c.pareto_std > 0)) bad("pareto_std must be > 0");
  if (c.r_min < 1) bad("r_min must be >= 1");
  if (c.r_max < c.r_min) bad("r_max must be >= r_min");
  if (c.r_max > c.capacity) bad("r_max must not exceed capacity");
  if (c.l_min < 1) bad("l_min must be >= 1");
  if (c.l_max < c.l_min) bad("l_max must be >= l_min");
  if (c.batch < 1) bad("batch must be >= 1");
  if (c.batch > c.tenants) bad("batch must not exceed tenants");
  if (!(c.egreedy_b > 0)) bad("egreedy_b must be > 0");
  if (!(c.egreedy_d > 0) || c.egreedy_d > 1) bad("egreedy_d must lie in (0, 1]");
  if (!(c.frac_min > 0) || c.frac_min > 1) bad("frac_min must lie in (0, 1]");
  if (c.frac_max < c.frac_min || c.frac_max > 1)
    bad("frac_max must lie in [frac_min, 1]");
  if (c.optimum_max_horizon < 1) bad("optimum_max_horizon must be >= 1");
}

std::string serialize(const ScenarioConfig& c) {
  std::ostringstream os;
  os << "[scenario]\n";
  os << "tenants = " << c.tenants << "\n";
  os << "templates = " << c.templates << "\n";
  os << "capacity = " << c.capacity << "\n";
  os << "alpha = " << fmt(c.alpha) << "\n";
  os << "horizon = " << c.horizon << "\n";
  os << "seed = " << c.seed << "\n";
  os << "monitoring = " << (c.monitoring ? "true" : "false") << "\n";
  os << "\n[traffic]\n";
  os << "pareto_mean = " << fmt(c.pareto_mean) << "\n";
  os << "pareto_std = " << fmt(c.pareto_std) << "\n";
  os << "\n[templates]\n";
  os << "r_min = " << c.r_min << "\n";
  os << "r_max = " << c.r_max << "\n";
  os << "l_min = " << c.l_min << "\n";
  os << "l_max = " << c.l_max << "\n";
  os << "\n[utilization]\n";
  os << "model = " << (c.util_model == UtilModel::uniform ? "uniform" : "frac_spread")
     << "\n";
  os << "frac_min = " << fmt(c.frac_min) << "\n";
  os << "frac_max = " << fmt(c.frac_max) << "\n";
  os << "\n[policy]\n";
  os << "batch = " << c.batch << "\n";
  os << "egreedy_b = " << fmt(c.egreedy_b) << "\n";
  os << "egreedy_d = " << fmt(c.egreedy_d) << "\n";
  os << "tie_break = " << (c.tie_break == TieBreak::lowest_id ? "lowest" : "random")
     << "\n";
  os << "eucb_solver = "
     << (c.eucb_solver == EucbSolver::enumerate ? "enumerate" : "dp") << "\n";
  os << "\n[optimum]\n";
  os << "max_horizon = " << c.optimum_max_horizon << "\n";
  return os.str();
}

ScenarioConfig parse_scenario(std::istream& in) {
  ScenarioConfig c;
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(lineno, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      if (section != "scenario" && section != "traffic" && section != "templates" &&
          section != "utilization" && section != "policy" && section != "optimum")
        fail(lineno, "unknown section '" + section + "'");
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos) fail(lineno, "expected 'key = value'");
    std::string key = trim(s.substr(0, eq));
    std::string val = trim(s.substr(eq + 1));
    if (key.empty()) fail(lineno, "empty key");
    if (section.empty()) fail(lineno, "key outside any section");

    auto unknown = [&]() { fail(lineno, "unknown key '" + key + "' in [" + section + "]"); };
    if (section == "scenario") {
      if (key == "tenants") c.tenants = static_cast<int>(parse_int(val, lineno));
      else if (key == "templates") c.templates = static_cast<int>(parse_int(val, lineno));
      else if (key == "capacity") c.capacity = static_cast<int>(parse_int(val, lineno));
      else if (key == "alpha") c.alpha = parse_double(val, lineno);
      else if (key == "horizon") c.horizon = static_cast<int>(parse_int(val, lineno));
      else if (key == "seed") c.seed = static_cast<std::uint64_t>(parse_int(val, lineno));
      else if (key == "monitoring") c.monitoring = parse_bool(val, lineno);
      else unknown();
    } else if (section == "traffic") {
      if (key == "pareto_mean") c.pareto_mean = parse_double(val, lineno);
      else if (key == "pareto_std") c.pareto_std = parse_double(val, lineno);
      else unknown();
    } else if (section == "templates") {
      if (key == "r_min") c.r_min = static_cast<int>(parse_int(val, lineno));
      else if (key == "r_max") c.r_max = static_cast<int>(parse_int(val, lineno));
      else if (key == "l_min") c.l_min = static_cast<int>(parse_int(val, lineno));
      else if (key == "l_max") c.l_max = static_cast<int>(parse_int(val, lineno));
      else unknown();
    } else if (section == "utilization") {
      if (key == "model") {
        if (val == "uniform") c.util_model = UtilModel::uniform;
        else if (val == "frac_spread") c.util_model = UtilModel::frac_spread;
        else fail(lineno, "model must be 'uniform' or 'frac_spread'");
      } else if (key == "frac_min") c.frac_min = parse_double(val, lineno);
      else if (key == "frac_max") c.frac_max = parse_double(val, lineno);
      else unknown();
    } else if (section == "policy") {
      if (key == "batch") c.batch = static_cast<int>(parse_int(val, lineno));
      else if (key == "egreedy_b") c.egreedy_b = parse_double(val, lineno);
      else if (key == "egreedy_d") c.egreedy_d = parse_double(val, lineno);
      else if (key == "tie_break") {
        if (val == "lowest") c.tie_break = TieBreak::lowest_id;
        else if (val == "random") c.tie_break = TieBreak::random;
        else fail(lineno, "tie_break must be 'lowest' or 'random'");
      } else if (key == "eucb_solver") {
        if (val == "enumerate") c.eucb_solver = EucbSolver::enumerate;
        else if (val == "dp") c.eucb_solver = EucbSolver::dp;
        else fail(lineno, "eucb_solver must be 'enumerate' or 'dp'");
      } else unknown();
    } else if (section == "optimum") {
      if (key == "max_horizon") c.optimum_max_horizon = static_cast<int>(parse_int(val, lineno));
      else unknown();
    }
  }
  validate(c);
  return c;
}

ScenarioConfig parse_scenario_string(const std::string& text) {
  std::istringstream is(text);
  return parse_scenario(is);
}

ScenarioConfig load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  return parse_scenario(in);
}

Scenario materialize(const ScenarioConfig& cfg) {
  validate(cfg);
  Scenario sc;
  sc.cfg = cfg;
  Rng rng(derive_seed(cfg.seed, 0, Stream::scenario));
  sc.catalog.resize(cfg.templates);
  for (int s = 0; s < cfg.templates; ++s) {
    sc.catalog[s].id = s;
    sc.catalog[s].resources = static_cast<int>(rng.uniform_int(cfg.r_min, cfg.r_max));
    sc.catalog[s].duration = static_cast<int>(rng.uniform_int(cfg.l_min, cfg.l_max));
  }
  bool clamped = false;
  auto rates = sample_arrival_rates(cfg.tenants, cfg.pareto_mean, cfg.pareto_std,
                                    rng, &clamped);
  sc.rate_clamped = clamped;
  sc.tenants.resize(cfg.tenants);
  for (int i = 0; i < cfg.tenants; ++i) {
    sc.tenants[i].id = i;
    sc.tenants[i].arrival_rate = rates[i];
    sc.tenants[i].util_max_frac =
        cfg.util_model == UtilModel::frac_spread
            ? rng.uniform(cfg.frac_min, cfg.frac_max)
            : 1.0;
  }
  return sc;
}

}  // namespace blmab

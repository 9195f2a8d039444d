#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "blmab/experiment.hpp"
#include "blmab/trace.hpp"

namespace blmab {

// Shortest decimal text that round-trips the double, locale-independent.
std::string double_text(double v);

// One row per round: round,granted_ids,reward_sum,utilization,cost_sum,violation
// granted_ids joins 1-based tenant ids with '|' and is empty on idle rounds.
// Output bytes depend only on the trace contents.
std::string csv_of_trace(const SimulationTrace& trace);

// Whole-experiment summary (scenario, catalog, per-policy aggregates and
// per-seed rows) as stable-ordered, indented JSON.  Wall-clock fields are the
// only values that vary between reruns.
std::string json_of_experiment(const ExperimentResult& result);

// File name for a run's per-round CSV, e.g. "onets_seed0003.csv".
std::string trace_csv_name(const std::string& policy, int run);

void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace blmab

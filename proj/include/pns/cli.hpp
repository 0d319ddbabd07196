#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pns/generator.hpp"
#include "pns/indicators.hpp"
#include "pns/instance_io.hpp"
#include "pns/solver.hpp"

namespace pns::cli {

// Default output directory: $PNS_OUT_DIR when set, else the working directory.
std::filesystem::path default_out_dir();

// Accepts "300", "300s", "5.5s" or "250ms".
std::chrono::milliseconds parse_duration(const std::string& text);

// Accepts a comma-separated percent list, e.g. "3,6,9,2,4".
destroy_strategy parse_destroy_strategy(const std::string& text);

struct solve_config {
  std::filesystem::path instance_path;
  std::uint64_t seed = 1;
  std::int32_t sectors = 3;
  std::int32_t l_max = 92;
  destroy_strategy strategy;  // (3, 6, 9, 2, 4)
  std::chrono::milliseconds time_limit = std::chrono::seconds(300);
  std::filesystem::path out_dir = default_out_dir();
};

struct solve_outcome {
  persisted_run files;
  solve_stats stats;
  std::size_t archive_size = 0;
  objective_vector f1_extreme;  // lowest-cost member
  objective_vector f2_extreme;  // highest-quality member
};

// DRC followed by PLNS under one seed; persists the approximation set and
// run metadata, prints a one-paragraph summary to `log`.
solve_outcome cmd_solve(const solve_config& config, std::ostream& log);

struct evaluate_config {
  std::filesystem::path instance_path;
  std::vector<std::filesystem::path> set_paths;
  std::optional<std::filesystem::path> ref_front_path;  // default: union of the sets
  std::optional<std::filesystem::path> out_csv;         // default: stdout only
};

// Scores each approximation set against the reference set and emits one CSV
// row per input. All sets must reference the same instance id.
std::vector<indicator_report> cmd_evaluate(const evaluate_config& config, std::ostream& out);

struct generate_config {
  generator_config gen;
  std::optional<std::filesystem::path> out_path;  // default: <class>_s<seed>.wdp
};

std::filesystem::path cmd_generate(const generate_config& config, std::ostream& log);

struct ttt_config {
  std::filesystem::path instance_path;
  double target_hv = 0.0;
  std::int32_t runs = 75;
  std::chrono::milliseconds run_limit = std::chrono::seconds(180);
  std::uint64_t base_seed = 1;
  std::int32_t jobs = 1;
  std::int32_t sectors = 3;
  std::int32_t l_max = 92;
  destroy_strategy strategy;
  std::optional<std::filesystem::path> out_csv;
};

struct ttt_row {
  double time_s = 0.0;
  double plot_position = 0.0;  // i/(n+1) empirical-CDF position
  bool censored = false;
  std::uint64_t seed = 0;
};

// Repeats seeded runs, recording the first instant the archive's normalized
// hypervolume reaches the target; runs that miss it within the limit are
// censored at the limit. Rows come back sorted by time.
std::vector<ttt_row> cmd_ttt(const ttt_config& config, std::ostream& out);

struct front_config {
  std::filesystem::path instance_path;
  std::int32_t bid_limit = 24;
  std::optional<std::filesystem::path> out_path;  // default: <instance>_front.approx
};

// Exports the exact Pareto front in the approximation-set format, ready to
// be fed back through --ref-front.
std::filesystem::path cmd_front(const front_config& config, std::ostream& log);

}  // namespace pns::cli

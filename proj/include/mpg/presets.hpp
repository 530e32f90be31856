#pragma once

#include <string>
#include <vector>

#include "mpg/harness.hpp"
#include "mpg/theory.hpp"

namespace mpg {

// One bisection performed while resolving a preset.
struct SizingOutcome {
  std::string algorithm_id;
  InstanceSpec instance;
  Goal goal = Goal::peak_1;
  bool feasible = false;
  std::uint32_t population_size = 0;  // valid when feasible
};

struct TheoryRow {
  std::uint32_t L = 0;
  std::uint32_t n = 0;
  Goal goal = Goal::peak_1;
  theory::DistanceMode d_mode = theory::DistanceMode::order_statistic;
  double expected_distance = 0.0;
  double expected_restarts = 0.0;
  double expected_evals = 0.0;
};

TheoryRow theory_row(std::uint32_t L, std::uint32_t n, Goal goal,
                     theory::DistanceMode d_mode);

struct PresetResult {
  std::vector<RunRecord> records;
  std::vector<SizingOutcome> sizing;
  std::vector<TheoryRow> theory;  // closed-form presets only
};

// Named experiment presets; run counts are defaults that `runs_override`
// (when nonzero) replaces.
std::vector<std::string> preset_names();
bool is_preset(const std::string& name);
PresetResult run_preset(const std::string& name, std::uint64_t master_seed,
                        std::uint32_t runs_override = 0);

}  // namespace mpg

#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "mpg/instance.hpp"

namespace mpg {

// One algorithm run. Evaluations are the sole cost measure; success means
// the goal was reached within the budget.
struct RunRecord {
  std::string algorithm_id;
  std::uint32_t instance_L = 0;
  std::uint32_t instance_n = 0;
  HeightMode height_mode = HeightMode::equal;
  std::uint64_t instance_seed = 0;
  Goal goal = Goal::peak_1;
  std::uint32_t run_index = 0;
  std::uint64_t run_seed = 0;
  std::uint64_t evals = 0;
  std::uint64_t restarts_or_generations = 0;  // NAHC calls or EA steps
  bool success = false;
  std::set<int> peaks_found;
  std::uint64_t wall_budget = 0;

  // Grouping key: one cell per (instance, algorithm, goal).
  std::string cell_key() const {
    return "L" + std::to_string(instance_L) + "-n" + std::to_string(instance_n) +
           "-" + to_string(height_mode) + "-s" + std::to_string(instance_seed) +
           "|" + algorithm_id + "|" + to_string(goal);
  }
};

}  // namespace mpg

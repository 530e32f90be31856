#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpg/run_record.hpp"

namespace mpg {

// Per-cell aggregate over the evals of successful runs; unsuccessful runs
// are reported through count/successes only.
struct SummaryStats {
  std::uint32_t instance_L = 0;
  std::uint32_t instance_n = 0;
  HeightMode height_mode = HeightMode::equal;
  std::uint64_t instance_seed = 0;
  std::string algorithm_id;
  Goal goal = Goal::peak_1;

  std::size_t count = 0;      // runs in the cell
  std::size_t successes = 0;  // runs that reached the goal within budget
  double success_rate = 0.0;

  std::optional<double> mean, min, q1, median, q3, max;
  std::optional<double> mean_restarts;  // NAHC calls / EA steps, successful runs
};

// Quantile by linear interpolation between closest ranks: position
// p * (count - 1). Input need not be sorted.
double quantile(std::vector<double> values, double p);

// One SummaryStats per (instance, algorithm, goal) cell, ordered by first
// appearance of the cell in `records`.
std::vector<SummaryStats> summarize(const std::vector<RunRecord>& records);

}  // namespace mpg

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mpg/run_record.hpp"

namespace mpg {

struct BisectionConfig {
  std::uint32_t initial_size = 4;
  std::uint32_t runs_per_trial = 100;
  std::uint32_t successes_required = 100;
  double relative_threshold = 0.1;  // stop when (high - low)/high <= this
  std::uint64_t eval_budget = 5'000'000;
  std::uint32_t repetitions = 30;
  std::uint32_t size_ceiling = 1u << 20;
};

// Executes one run at the given population size with the given seed.
using RunFactory =
    std::function<RunRecord(std::uint32_t pop_size, std::uint64_t run_seed)>;

struct TrialOutcome {
  std::uint32_t pop_size = 0;
  bool passed = false;
  std::uint32_t runs_executed = 0;  // may be fewer than runs_per_trial
};

struct BisectionResult {
  bool feasible = false;
  std::uint32_t minimal_size = 0;  // final high; valid when feasible
  std::vector<RunRecord> measurement_runs;
  std::vector<TrialOutcome> trace;
};

// One sequence of independent runs at size N; true iff at least
// successes_required of runs_per_trial succeed. Short-circuits in both
// directions as soon as the outcome is decided.
bool trial(std::uint32_t N, const RunFactory& factory, const BisectionConfig& cfg,
           Rng& seed_rng, std::vector<RunRecord>* runs_out = nullptr);

// Doubling-then-binary-search for the minimal population size meeting the
// success criterion. Returns the final high plus the measurement runs
// executed at it; infeasible when doubling passes the ceiling.
BisectionResult bisect(const RunFactory& factory, const BisectionConfig& cfg,
                       std::uint64_t seed);

}  // namespace mpg

#include "mpg/sizing.hpp"

#include <stdexcept>

namespace mpg {

bool trial(std::uint32_t N, const RunFactory& factory, const BisectionConfig& cfg,
           Rng& seed_rng, std::vector<RunRecord>* runs_out) {
  if (N < 2) throw std::invalid_argument("trial: requires N >= 2");
  if (cfg.successes_required > cfg.runs_per_trial) {
    throw std::invalid_argument("trial: successes_required > runs_per_trial");
  }

  const std::uint32_t allowed_failures =
      cfg.runs_per_trial - cfg.successes_required;
  std::uint32_t successes = 0;
  std::uint32_t failures = 0;
  for (std::uint32_t i = 0; i < cfg.runs_per_trial; ++i) {
    RunRecord rec = factory(N, seed_rng.next_u64());
    rec.success ? ++successes : ++failures;
    if (runs_out != nullptr) runs_out->push_back(std::move(rec));
    if (runs_out == nullptr) {
      // Outcome decided: short-circuit.
      if (failures > allowed_failures) return false;
      if (successes >= cfg.successes_required) return true;
    }
  }
  return successes >= cfg.successes_required;
}

BisectionResult bisect(const RunFactory& factory, const BisectionConfig& cfg,
                       std::uint64_t seed) {
  if (cfg.initial_size < 2) {
    throw std::invalid_argument("bisect: requires initial_size >= 2");
  }
  if (!(cfg.relative_threshold > 0.0 && cfg.relative_threshold < 1.0)) {
    throw std::invalid_argument("bisect: relative_threshold outside (0, 1)");
  }

  Rng seed_rng(seed);
  BisectionResult result;

  auto run_trial = [&](std::uint32_t N) {
    TrialOutcome outcome;
    outcome.pop_size = N;
    std::uint32_t executed = 0;
    // Count executed runs through a wrapper so short-circuits are visible.
    RunFactory counted = [&](std::uint32_t size, std::uint64_t run_seed) {
      ++executed;
      return factory(size, run_seed);
    };
    outcome.passed = trial(N, counted, cfg, seed_rng);
    outcome.runs_executed = executed;
    result.trace.push_back(outcome);
    return outcome.passed;
  };

  // Doubling phase.
  std::uint32_t high = cfg.initial_size;
  bool bracketed = false;
  if (!run_trial(high)) {
    for (;;) {
      if (high > cfg.size_ceiling / 2) return result;  // infeasible
      high *= 2;
      if (run_trial(high)) {
        bracketed = true;
        break;
      }
    }
  }

  // Binary search between the last failure and the first success.
  if (bracketed) {
    std::uint32_t low = high / 2;
    while (static_cast<double>(high - low) / high > cfg.relative_threshold) {
      const std::uint32_t mid = (low + high + 1) / 2;  // round((low+high)/2)
      if (mid == low || mid == high) break;
      if (run_trial(mid)) {
        high = mid;
      } else {
        low = mid;
      }
    }
  }

  // Measurement sample at the final high, no short-circuit.
  TrialOutcome measurement;
  measurement.pop_size = high;
  measurement.passed = trial(high, factory, cfg, seed_rng, &result.measurement_runs);
  measurement.runs_executed = cfg.runs_per_trial;
  result.trace.push_back(measurement);

  result.feasible = true;
  result.minimal_size = high;
  return result;
}

}  // namespace mpg

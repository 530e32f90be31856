#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mpg/sizing.hpp"

using namespace mpg;

namespace {

RunRecord record_with(bool success, std::uint32_t pop_size,
                      std::uint64_t run_seed) {
  RunRecord rec;
  rec.algorithm_id = "synthetic";
  rec.run_seed = run_seed;
  rec.success = success;
  rec.evals = pop_size;  // stand-in payload for round-trip checks
  return rec;
}

// Deterministic predicate: every run at size N succeeds iff N >= threshold.
RunFactory threshold_factory(std::uint32_t threshold) {
  return [threshold](std::uint32_t pop_size, std::uint64_t run_seed) {
    return record_with(pop_size >= threshold, pop_size, run_seed);
  };
}

}  // namespace

TEST_CASE("trial respects the success quota") {
  BisectionConfig cfg;
  cfg.runs_per_trial = 100;
  cfg.successes_required = 100;
  Rng seed_rng(1);
  CHECK_FALSE(trial(36, threshold_factory(37), cfg, seed_rng));
  CHECK(trial(64, threshold_factory(37), cfg, seed_rng));
  CHECK_THROWS_AS(trial(1, threshold_factory(37), cfg, seed_rng),
                  std::invalid_argument);
  cfg.successes_required = 101;
  CHECK_THROWS_AS(trial(64, threshold_factory(37), cfg, seed_rng),
                  std::invalid_argument);
}

TEST_CASE("trial short-circuits once the outcome is decided") {
  BisectionConfig cfg;
  cfg.runs_per_trial = 100;
  cfg.successes_required = 100;
  Rng seed_rng(2);

  std::uint32_t calls = 0;
  const RunFactory fail_on_third = [&calls](std::uint32_t pop_size,
                                            std::uint64_t run_seed) {
    ++calls;
    return record_with(calls < 3, pop_size, run_seed);
  };
  CHECK_FALSE(trial(8, fail_on_third, cfg, seed_rng));
  CHECK(calls == 3);

  // With a run sink every run executes, even when already decided.
  calls = 0;
  std::vector<RunRecord> sink;
  CHECK_FALSE(trial(8, fail_on_third, cfg, seed_rng, &sink));
  CHECK(calls == 100);
  CHECK(sink.size() == 100);
}

TEST_CASE("bisection converges onto the deterministic threshold") {
  BisectionConfig cfg;
  cfg.initial_size = 2;
  cfg.runs_per_trial = 100;
  cfg.successes_required = 100;
  cfg.relative_threshold = 0.1;

  const auto result = bisect(threshold_factory(37), cfg, 99);
  REQUIRE(result.feasible);
  CHECK(result.minimal_size >= 37);
  CHECK(result.minimal_size <= 41);
  CHECK(result.measurement_runs.size() == 100);
  for (const auto& rec : result.measurement_runs) {
    CHECK(rec.success);
    CHECK(rec.evals == result.minimal_size);
  }

  // Doubling trials below the threshold stop after their first failed run.
  REQUIRE(result.trace.size() >= 2);
  for (const auto& outcome : result.trace) {
    if (!outcome.passed) CHECK(outcome.runs_executed == 1);
  }
  // The final trace entry is the full measurement sample.
  CHECK(result.trace.back().pop_size == result.minimal_size);
  CHECK(result.trace.back().runs_executed == 100);
}

TEST_CASE("an immediately passing trial keeps the initial size") {
  BisectionConfig cfg;
  cfg.initial_size = 4;
  const auto result = bisect(threshold_factory(2), cfg, 1);
  REQUIRE(result.feasible);
  CHECK(result.minimal_size == 4);
  CHECK(result.trace.size() == 2);  // initial trial + measurement
  CHECK(result.measurement_runs.size() == cfg.runs_per_trial);
}

TEST_CASE("sizes past the ceiling are reported infeasible") {
  BisectionConfig cfg;
  cfg.initial_size = 4;
  cfg.size_ceiling = 1u << 12;
  const RunFactory never = [](std::uint32_t pop_size, std::uint64_t run_seed) {
    return record_with(false, pop_size, run_seed);
  };
  const auto result = bisect(never, cfg, 7);
  CHECK_FALSE(result.feasible);
  CHECK(result.minimal_size == 0);
  CHECK(result.measurement_runs.empty());
  CHECK(result.trace.back().pop_size <= cfg.size_ceiling);
}

TEST_CASE("bisect validates its configuration") {
  BisectionConfig cfg;
  cfg.initial_size = 1;
  CHECK_THROWS_AS(bisect(threshold_factory(4), cfg, 1), std::invalid_argument);
  cfg.initial_size = 4;
  cfg.relative_threshold = 0.0;
  CHECK_THROWS_AS(bisect(threshold_factory(4), cfg, 1), std::invalid_argument);
  cfg.relative_threshold = 1.5;
  CHECK_THROWS_AS(bisect(threshold_factory(4), cfg, 1), std::invalid_argument);
}

TEST_CASE("trial seeds come from the shared stream in order") {
  BisectionConfig cfg;
  cfg.runs_per_trial = 5;
  cfg.successes_required = 5;

  std::vector<std::uint64_t> seen;
  const RunFactory capture = [&seen](std::uint32_t pop_size,
                                     std::uint64_t run_seed) {
    seen.push_back(run_seed);
    return record_with(true, pop_size, run_seed);
  };

  Rng seed_rng(42);
  Rng reference(42);
  trial(8, capture, cfg, seed_rng);
  REQUIRE(seen.size() == 5);
  for (std::uint64_t s : seen) CHECK(s == reference.next_u64());
}

#pragma once

#include "mpg/instance.hpp"
#include "mpg/run_record.hpp"

namespace mpg {

struct ClimbResult {
  BitString hilltop;
  double hilltop_fitness = 0.0;
  std::uint64_t evals_used = 0;
  BitString start;
  bool truncated = false;  // budget ran out mid-climb
};

// Next-ascent hillclimbing: scan the single-bit-flip neighbours in a fresh
// uniformly random order each pass, move to the first strict improvement,
// stop when a full scan finds none. The neighbour that would recreate the
// previous current solution is skipped.
ClimbResult nahc_from(const ProblemInstance& inst, BitString start, Rng& rng,
                      EvalCounter& counter);

// Same, from a uniformly random start.
ClimbResult nahc(const ProblemInstance& inst, Rng& rng, EvalCounter& counter);

// Multistart NAHC: climb from fresh random starts until the goal is
// reached or the budget is exhausted. Hilltops are matched against peak
// locations by exact equality at zero evaluation cost.
RunRecord ms_nahc(const ProblemInstance& inst, Goal goal, std::uint64_t budget,
                  std::uint64_t run_seed);

}  // namespace mpg

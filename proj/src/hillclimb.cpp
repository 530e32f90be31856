#include "mpg/hillclimb.hpp"

#include <numeric>

namespace mpg {

ClimbResult nahc_from(const ProblemInstance& inst, BitString start, Rng& rng,
                      EvalCounter& counter) {
  ClimbResult result;
  result.start = start;
  const std::uint64_t evals_before = counter.count();

  if (counter.exhausted()) {
    result.hilltop = std::move(start);
    result.truncated = true;
    return result;
  }

  BitString x = std::move(start);
  double fx = evaluate(inst, x, rng, counter);
  int prev_bit = -1;  // bit whose flip would recreate the previous solution

  std::vector<std::uint32_t> order(inst.length());
  std::iota(order.begin(), order.end(), 0u);

  bool improved = true;
  bool truncated = false;
  while (improved && !truncated) {
    improved = false;
    rng.shuffle(order);
    for (std::uint32_t bit : order) {
      if (static_cast<int>(bit) == prev_bit) continue;
      if (counter.exhausted()) {
        truncated = true;
        break;
      }
      x.flip(bit);
      const double fs = evaluate(inst, x, rng, counter);
      if (fs > fx) {
        fx = fs;
        prev_bit = static_cast<int>(bit);
        improved = true;
        break;
      }
      x.flip(bit);  // not an improvement, undo
    }
  }

  result.hilltop = std::move(x);
  result.hilltop_fitness = fx;
  result.evals_used = counter.count() - evals_before;
  result.truncated = truncated;
  return result;
}

ClimbResult nahc(const ProblemInstance& inst, Rng& rng, EvalCounter& counter) {
  return nahc_from(inst, BitString::random(inst.length(), rng), rng, counter);
}

RunRecord ms_nahc(const ProblemInstance& inst, Goal goal, std::uint64_t budget,
                  std::uint64_t run_seed) {
  if (budget < 1) throw std::invalid_argument("ms_nahc: budget must be >= 1");

  Rng rng(run_seed);
  EvalCounter counter(budget);

  RunRecord rec;
  rec.algorithm_id = "ms-nahc";
  rec.instance_L = inst.length();
  rec.instance_n = inst.num_peaks();
  rec.height_mode = inst.height_mode();
  rec.instance_seed = inst.generator_seed();
  rec.goal = goal;
  rec.run_seed = run_seed;
  rec.wall_budget = budget;

  while (!counter.exhausted()) {
    const ClimbResult climb = nahc(inst, rng, counter);
    if (climb.truncated) break;
    ++rec.restarts_or_generations;
    for (int i : inst.peak_indices_at(climb.hilltop)) rec.peaks_found.insert(i);
    if (goal_reached(inst, rec.peaks_found, goal)) {
      rec.success = true;
      break;
    }
  }

  rec.evals = counter.count();
  return rec;
}

}  // namespace mpg

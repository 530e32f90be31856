#pragma once

#include <set>
#include <string>
#include <vector>

#include "mpg/instance.hpp"
#include "mpg/run_record.hpp"

namespace mpg {

// Fitness is the value returned by the evaluate call that produced it;
// never recomputed implicitly.
struct Individual {
  BitString genome;
  double fitness = 0.0;
};

enum class EAKind { rts, rts_mr, mu_1p1, idealized };

std::string to_string(EAKind kind);
EAKind ea_kind_from_string(std::string_view s);

struct EAConfig {
  EAKind algorithm = EAKind::rts;
  std::uint32_t population_size = 0;
  double crossover_rate = 0.8;
  double mutation_rate = 0.0;    // 0 -> 1/L at run start
  std::uint32_t window_size = 0;  // 0 -> min(4n, N) at run start
  std::uint32_t tournament_size = 2;  // idealized only
};

// Bit-flip mutation, each bit independently with the given rate.
void mutate(BitString& genome, double rate, Rng& rng);

// Uniform crossover in place: each position swaps between a and b with
// probability 1/2.
void uniform_crossover(BitString& a, BitString& b, Rng& rng);

// Index of the most Hamming-similar of w members sampled uniformly without
// replacement, subject to distance >= min_dist. Ties broken uniformly at
// random; -1 if no scanned member satisfies the floor.
int most_similar_scan(const std::vector<Individual>& pop, const BitString& target,
                      std::uint32_t w, Rng& rng, std::size_t min_dist);

// One steady-state step each. `found` accumulates 1-based indices of peaks
// whose location has been evaluated (or held by the initial population).
// Returns false when the evaluation budget ran out mid-step.
bool rts_step(std::vector<Individual>& pop, const ProblemInstance& inst,
              const EAConfig& cfg, Rng& rng, EvalCounter& counter,
              std::set<int>& found);
bool rts_mr_step(std::vector<Individual>& pop, const ProblemInstance& inst,
                 const EAConfig& cfg, Rng& rng, EvalCounter& counter,
                 std::set<int>& found);
bool mu_1p1_step(std::vector<Individual>& pop, const ProblemInstance& inst,
                 const EAConfig& cfg, Rng& rng, EvalCounter& counter,
                 std::set<int>& found);

// Oracle clustering for the idealized algorithm: member indices grouped by
// nearest peak (slot p holds peak index p+1), distance ties assigned
// uniformly at random among the tied indices.
std::vector<std::vector<std::size_t>> cluster_by_nearest(
    const std::vector<Individual>& pop, const ProblemInstance& inst, Rng& rng);

// One generation of the idealized niching algorithm: partition by nearest
// peak (ties assigned uniformly at random), then evolve each sub-population
// independently with size-2 tournaments, uniform crossover, mutation, and
// replacement of the worst half by the offspring. Sub-populations whose
// peak is already in `found` are frozen: the algorithm behaves as n
// separate EAs, and one that has reached its peak stops evaluating.
bool idealized_step(std::vector<Individual>& pop, const ProblemInstance& inst,
                    const EAConfig& cfg, Rng& rng, EvalCounter& counter,
                    std::set<int>& found);

// ceil(20 * n * lg n); at least 2.
std::uint32_t idealized_population_size(std::uint32_t n);

RunRecord run_ea(const ProblemInstance& inst, const EAConfig& cfg, Goal goal,
                 std::uint64_t budget, std::uint64_t run_seed);

}  // namespace mpg

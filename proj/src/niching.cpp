#include "mpg/niching.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpg {

std::string to_string(EAKind kind) {
  switch (kind) {
    case EAKind::rts: return "rts";
    case EAKind::rts_mr: return "rts-mr";
    case EAKind::mu_1p1: return "mu1p1";
    case EAKind::idealized: return "idealized";
  }
  throw std::logic_error("unknown EA kind");
}

EAKind ea_kind_from_string(std::string_view s) {
  if (s == "rts") return EAKind::rts;
  if (s == "rts-mr" || s == "rts_mr") return EAKind::rts_mr;
  if (s == "mu1p1" || s == "mu_1p1") return EAKind::mu_1p1;
  if (s == "idealized") return EAKind::idealized;
  throw std::invalid_argument("unknown EA kind: " + std::string(s));
}

void mutate(BitString& genome, double rate, Rng& rng) {
  const std::size_t L = genome.length();
  if (rate >= 1.0) {
    for (std::size_t i = 0; i < L; ++i) genome.flip(i);
    return;
  }
  if (rate <= 0.0) throw std::invalid_argument("mutate: rate must be in (0, 1]");
  // Geometric gaps between flipped positions.
  const double log_q = std::log1p(-rate);
  std::size_t i = static_cast<std::size_t>(std::log(rng.next_unit_open()) / log_q);
  while (i < L) {
    genome.flip(i);
    i += 1 + static_cast<std::size_t>(std::log(rng.next_unit_open()) / log_q);
  }
}

void uniform_crossover(BitString& a, BitString& b, Rng& rng) {
  if (a.length() != b.length()) {
    throw std::invalid_argument("uniform_crossover: length mismatch");
  }
  auto& wa = a.words();
  auto& wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    std::uint64_t mask = rng.next_u64();
    if (w + 1 == wa.size()) mask &= a.tail_mask();
    const std::uint64_t diff = (wa[w] ^ wb[w]) & mask;
    wa[w] ^= diff;
    wb[w] ^= diff;
  }
}

int most_similar_scan(const std::vector<Individual>& pop, const BitString& target,
                      std::uint32_t w, Rng& rng, std::size_t min_dist) {
  const std::size_t N = pop.size();
  if (w == 0 || w > N) {
    throw std::invalid_argument("most_similar_scan: requires 1 <= w <= population size");
  }

  // Floyd's sampling (w distinct indices, each subset equally likely) with
  // an epoch-marked scratch buffer: no per-call allocation on the hot path.
  thread_local std::vector<std::uint64_t> marks;
  thread_local std::uint64_t epoch = 0;
  if (marks.size() < N) marks.resize(N, 0);
  ++epoch;

  int best = -1;
  std::size_t best_dist = 0;
  std::uint64_t ties = 0;
  auto scan = [&](std::size_t idx) {
    const std::size_t d = pop[idx].genome.hamming(target);
    if (d < min_dist) return;
    if (best < 0 || d < best_dist) {
      best = static_cast<int>(idx);
      best_dist = d;
      ties = 1;
    } else if (d == best_dist && rng.next_below(++ties) == 0) {
      best = static_cast<int>(idx);
    }
  };
  for (std::size_t j = N - w; j < N; ++j) {
    const std::size_t t = rng.next_below(j + 1);
    if (marks[t] == epoch) {
      marks[j] = epoch;
      scan(j);
    } else {
      marks[t] = epoch;
      scan(t);
    }
  }
  return best;
}

namespace {

void note_found(const ProblemInstance& inst, const BitString& g,
                std::set<int>& found) {
  for (int i : inst.peak_indices_at(g)) found.insert(i);
}

// One child's competition against its most similar scanned member.
// Eval-saving rules: a child identical to its competitor is discarded with
// no evaluation; a child identical to a parent inherits that parent's
// stored fitness. Returns false on budget truncation.
bool compete(std::vector<Individual>& pop, BitString child, const Individual* pa,
             const Individual* pb, const ProblemInstance& inst,
             const EAConfig& cfg, Rng& rng, EvalCounter& counter,
             std::set<int>& found) {
  const int comp = most_similar_scan(pop, child, cfg.window_size, rng, 0);
  if (pop[comp].genome == child) return true;
  double fit;
  if (pa != nullptr && child == pa->genome) {
    fit = pa->fitness;
  } else if (pb != nullptr && child == pb->genome) {
    fit = pb->fitness;
  } else {
    if (counter.exhausted()) return false;
    fit = evaluate(inst, child, rng, counter);
    note_found(inst, child, found);
  }
  if (fit > pop[comp].fitness) {
    pop[comp] = Individual{std::move(child), fit};
  }
  return true;
}

// Steady-state body shared by RTS and RTS-MR once parents are chosen.
bool rts_offspring(std::vector<Individual>& pop, const Individual& A,
                   const Individual& B, const ProblemInstance& inst,
                   const EAConfig& cfg, Rng& rng, EvalCounter& counter,
                   std::set<int>& found) {
  BitString ca = A.genome;
  BitString cb = B.genome;
  if (rng.next_unit() < cfg.crossover_rate) uniform_crossover(ca, cb, rng);
  mutate(ca, cfg.mutation_rate, rng);
  mutate(cb, cfg.mutation_rate, rng);
  return compete(pop, std::move(ca), &A, &B, inst, cfg, rng, counter, found) &&
         compete(pop, std::move(cb), &A, &B, inst, cfg, rng, counter, found);
}

std::size_t tournament(const std::vector<std::size_t>& sub,
                       const std::vector<Individual>& pop, std::uint32_t size,
                       Rng& rng) {
  std::size_t best = sub[rng.next_below(sub.size())];
  std::uint64_t ties = 1;
  for (std::uint32_t i = 1; i < size; ++i) {
    const std::size_t cand = sub[rng.next_below(sub.size())];
    if (pop[cand].fitness > pop[best].fitness) {
      best = cand;
      ties = 1;
    } else if (pop[cand].fitness == pop[best].fitness &&
               rng.next_below(++ties) == 0) {
      best = cand;
    }
  }
  return best;
}

}  // namespace

bool rts_step(std::vector<Individual>& pop, const ProblemInstance& inst,
              const EAConfig& cfg, Rng& rng, EvalCounter& counter,
              std::set<int>& found) {
  const Individual A = pop[rng.next_below(pop.size())];
  const Individual B = pop[rng.next_below(pop.size())];
  return rts_offspring(pop, A, B, inst, cfg, rng, counter, found);
}

bool rts_mr_step(std::vector<Individual>& pop, const ProblemInstance& inst,
                 const EAConfig& cfg, Rng& rng, EvalCounter& counter,
                 std::set<int>& found) {
  const Individual A = pop[rng.next_below(pop.size())];
  if (cfg.crossover_rate == 0.0) {
    // Without crossover the mate plays no role and the per-offspring
    // process reduces to the same mutate-and-compete event as RTS.
    BitString child = A.genome;
    mutate(child, cfg.mutation_rate, rng);
    return compete(pop, std::move(child), &A, nullptr, inst, cfg, rng, counter,
                   found);
  }
  const int mate = most_similar_scan(pop, A.genome, cfg.window_size, rng, 2);
  if (mate < 0) {
    // No scanned member at distance >= 2: mutation-only step on A.
    BitString child = A.genome;
    mutate(child, cfg.mutation_rate, rng);
    return compete(pop, std::move(child), &A, nullptr, inst, cfg, rng, counter,
                   found);
  }
  const Individual B = pop[mate];
  return rts_offspring(pop, A, B, inst, cfg, rng, counter, found);
}

bool mu_1p1_step(std::vector<Individual>& pop, const ProblemInstance& inst,
                 const EAConfig& cfg, Rng& rng, EvalCounter& counter,
                 std::set<int>& found) {
  const std::size_t slot = rng.next_below(pop.size());
  BitString child = pop[slot].genome;
  mutate(child, cfg.mutation_rate, rng);
  if (child == pop[slot].genome) return true;  // no change, no evaluation
  if (counter.exhausted()) return false;
  const double fit = evaluate(inst, child, rng, counter);
  note_found(inst, child, found);
  if (fit > pop[slot].fitness) {
    pop[slot] = Individual{std::move(child), fit};
  }
  return true;
}

std::vector<std::vector<std::size_t>> cluster_by_nearest(
    const std::vector<Individual>& pop, const ProblemInstance& inst, Rng& rng) {
  std::vector<std::vector<std::size_t>> subs(inst.num_peaks());
  for (std::size_t i = 0; i < pop.size(); ++i) {
    // Reservoir pass: nearest peak, distance ties assigned uniformly.
    std::size_t best = inst.length() + 1;
    int idx = 0;
    std::uint64_t ties = 0;
    for (const Peak& p : inst.peaks()) {
      const std::size_t d = pop[i].genome.hamming(p.location);
      if (d < best) {
        best = d;
        idx = p.index;
        ties = 1;
      } else if (d == best && rng.next_below(++ties) == 0) {
        idx = p.index;
      }
    }
    subs[idx - 1].push_back(i);
  }
  return subs;
}

bool idealized_step(std::vector<Individual>& pop, const ProblemInstance& inst,
                    const EAConfig& cfg, Rng& rng, EvalCounter& counter,
                    std::set<int>& found) {
  const auto subs = cluster_by_nearest(pop, inst, rng);

  for (std::size_t p = 0; p < subs.size(); ++p) {
    // A sub-population whose peak is already on record is a separate EA
    // with nothing left to search for; it spends no further evaluations.
    if (found.count(static_cast<int>(p) + 1) != 0) continue;
    const auto& sub = subs[p];
    if (sub.size() < 2) continue;
    const std::size_t k = sub.size() / 2;

    std::vector<Individual> offspring;
    offspring.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      const Individual& p1 = pop[tournament(sub, pop, cfg.tournament_size, rng)];
      const Individual& p2 = pop[tournament(sub, pop, cfg.tournament_size, rng)];
      BitString ca = p1.genome;
      if (rng.next_unit() < cfg.crossover_rate) {
        BitString cb = p2.genome;  // sibling is dropped
        uniform_crossover(ca, cb, rng);
      }
      mutate(ca, cfg.mutation_rate, rng);
      double fit;
      if (ca == p1.genome) {
        fit = p1.fitness;
      } else if (ca == p2.genome) {
        fit = p2.fitness;
      } else {
        if (counter.exhausted()) return false;
        fit = evaluate(inst, ca, rng, counter);
        note_found(inst, ca, found);
      }
      offspring.push_back(Individual{std::move(ca), fit});
    }

    // Replace the worst half with the offspring.
    std::vector<std::size_t> by_fitness(sub);
    std::sort(by_fitness.begin(), by_fitness.end(),
              [&pop](std::size_t a, std::size_t b) {
                return pop[a].fitness != pop[b].fitness
                           ? pop[a].fitness < pop[b].fitness
                           : a < b;
              });
    for (std::size_t j = 0; j < k; ++j) {
      pop[by_fitness[j]] = std::move(offspring[j]);
    }
  }
  return true;
}

std::uint32_t idealized_population_size(std::uint32_t n) {
  if (n < 2) return 2;
  const double size = std::ceil(20.0 * n * std::log2(static_cast<double>(n)));
  return static_cast<std::uint32_t>(size);
}

RunRecord run_ea(const ProblemInstance& inst, const EAConfig& config, Goal goal,
                 std::uint64_t budget, std::uint64_t run_seed) {
  EAConfig cfg = config;
  const std::uint32_t n = inst.num_peaks();
  if (cfg.population_size == 0 && cfg.algorithm == EAKind::idealized) {
    cfg.population_size = idealized_population_size(n);
  }
  if (cfg.population_size < 2) {
    throw std::invalid_argument("run_ea: population size must be >= 2");
  }
  if (cfg.mutation_rate <= 0.0) cfg.mutation_rate = 1.0 / inst.length();
  if (cfg.window_size == 0) {
    cfg.window_size = std::min<std::uint32_t>(4 * n, cfg.population_size);
  }
  if (cfg.window_size > cfg.population_size) {
    throw std::invalid_argument("run_ea: window size exceeds population size");
  }
  if (budget < cfg.population_size) {
    throw std::invalid_argument(
        "run_ea: budget below population size (initialization evaluates the "
        "whole population)");
  }

  Rng rng(run_seed);
  EvalCounter counter(budget);

  RunRecord rec;
  rec.algorithm_id = to_string(cfg.algorithm);
  rec.instance_L = inst.length();
  rec.instance_n = n;
  rec.height_mode = inst.height_mode();
  rec.instance_seed = inst.generator_seed();
  rec.goal = goal;
  rec.run_seed = run_seed;
  rec.wall_budget = budget;

  std::vector<Individual> pop;
  pop.reserve(cfg.population_size);
  std::set<int>& found = rec.peaks_found;
  for (std::uint32_t i = 0; i < cfg.population_size; ++i) {
    BitString genome = BitString::random(inst.length(), rng);
    const double fit = evaluate(inst, genome, rng, counter);
    note_found(inst, genome, found);
    pop.push_back(Individual{std::move(genome), fit});
  }

  bool success = goal_reached(inst, found, goal);
  while (!success && !counter.exhausted()) {
    bool in_budget = true;
    switch (cfg.algorithm) {
      case EAKind::rts:
        in_budget = rts_step(pop, inst, cfg, rng, counter, found);
        break;
      case EAKind::rts_mr:
        in_budget = rts_mr_step(pop, inst, cfg, rng, counter, found);
        break;
      case EAKind::mu_1p1:
        in_budget = mu_1p1_step(pop, inst, cfg, rng, counter, found);
        break;
      case EAKind::idealized:
        in_budget = idealized_step(pop, inst, cfg, rng, counter, found);
        break;
    }
    ++rec.restarts_or_generations;
    success = goal_reached(inst, found, goal);
    if (!in_budget) break;
  }

  rec.success = success;
  rec.evals = counter.count();
  return rec;
}

}  // namespace mpg

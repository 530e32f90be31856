#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mpg/niching.hpp"

using namespace mpg;

namespace {

std::vector<Individual> make_pop(const std::vector<std::string>& genomes) {
  std::vector<Individual> pop;
  pop.reserve(genomes.size());
  for (const auto& g : genomes) pop.push_back({BitString::parse(g), 0.0});
  return pop;
}

double fitness_sum(const std::vector<Individual>& pop) {
  return std::accumulate(pop.begin(), pop.end(), 0.0,
                         [](double s, const Individual& ind) {
                           return s + ind.fitness;
                         });
}

}  // namespace

TEST_CASE("most_similar_scan picks the closest scanned member") {
  const auto pop = make_pop({"00000000", "00001111", "11111111"});
  const BitString target = BitString::parse("00000111");
  // Distances: 3, 1, 5.
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    CHECK(most_similar_scan(pop, target, 3, rng, 0) == 1);
    CHECK(most_similar_scan(pop, target, 3, rng, 2) == 0);
    CHECK(most_similar_scan(pop, target, 3, rng, 4) == 2);
    CHECK(most_similar_scan(pop, target, 3, rng, 6) == -1);
  }
  CHECK_THROWS_AS(most_similar_scan(pop, target, 0, rng, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(most_similar_scan(pop, target, 4, rng, 0),
                  std::invalid_argument);
}

TEST_CASE("most_similar_scan breaks distance ties uniformly") {
  const auto pop = make_pop({"0001", "0010", "1111"});
  const BitString target = BitString::parse("0000");
  Rng rng(7);
  int hits0 = 0;
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) {
    const int pick = most_similar_scan(pop, target, 3, rng, 0);
    REQUIRE((pick == 0 || pick == 1));
    if (pick == 0) ++hits0;
  }
  const double frac = static_cast<double>(hits0) / draws;
  CHECK(frac > 0.48);
  CHECK(frac < 0.52);
}

TEST_CASE("mutate flip counts follow the per-bit rate") {
  Rng rng(11);
  const std::uint32_t L = 1000;
  const double rate = 0.01;
  const int trials = 20000;
  std::int64_t flips = 0;
  for (int t = 0; t < trials; ++t) {
    BitString g(L);
    mutate(g, rate, rng);
    for (std::uint32_t b = 0; b < L; ++b) flips += g.get(b);
  }
  const double mean = static_cast<double>(flips) / trials;
  CHECK(mean == doctest::Approx(L * rate).epsilon(0.03));

  BitString g = BitString::parse("0101");
  mutate(g, 1.0, rng);
  CHECK(g == BitString::parse("1010"));
  CHECK_THROWS_AS(mutate(g, 0.0, rng), std::invalid_argument);
}

TEST_CASE("uniform_crossover preserves per-position bit multisets") {
  Rng rng(5);
  Rng gen(6);
  for (int t = 0; t < 100; ++t) {
    BitString a = BitString::random(130, gen);
    BitString b = BitString::random(130, gen);
    const BitString oa = a, ob = b;
    uniform_crossover(a, b, rng);
    for (std::uint32_t i = 0; i < 130; ++i) {
      CHECK(static_cast<int>(a.get(i)) + b.get(i) ==
            static_cast<int>(oa.get(i)) + ob.get(i));
      CHECK((a.get(i) == oa.get(i) || a.get(i) == ob.get(i)));
    }
  }

  // Identical parents are unchanged regardless of the mask.
  BitString x = BitString::parse("110011");
  BitString y = x;
  uniform_crossover(x, y, rng);
  CHECK(x == BitString::parse("110011"));
  CHECK(y == x);
}

TEST_CASE("crossover swap positions are unbiased") {
  Rng rng(17);
  const std::uint32_t L = 96;
  std::vector<int> swapped(L, 0);
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) {
    BitString a(L);
    BitString b(L);
    for (std::uint32_t i = 0; i < L; ++i) b.set(i, true);
    uniform_crossover(a, b, rng);
    for (std::uint32_t i = 0; i < L; ++i) swapped[i] += a.get(i);
  }
  for (std::uint32_t i = 0; i < L; ++i) {
    const double frac = static_cast<double>(swapped[i]) / trials;
    CHECK(frac > 0.46);
    CHECK(frac < 0.54);
  }
}

TEST_CASE("duplicate offspring cost no evaluations") {
  const auto inst = ProblemInstance::generate(64, 4, HeightMode::equal, 8);
  EAConfig cfg;
  cfg.population_size = 16;
  cfg.window_size = 16;
  cfg.crossover_rate = 0.0;
  cfg.mutation_rate = 1e-12;  // children are copies of their parents

  Rng rng(101);
  EvalCounter counter;
  std::set<int> found;
  std::vector<Individual> pop;
  for (std::uint32_t i = 0; i < cfg.population_size; ++i) {
    BitString g = BitString::random(64, rng);
    const double f = evaluate(inst, g, rng, counter);
    pop.push_back({std::move(g), f});
  }
  const auto before = counter.count();
  for (int step = 0; step < 200; ++step) {
    CHECK(rts_step(pop, inst, cfg, rng, counter, found));
    CHECK(rts_mr_step(pop, inst, cfg, rng, counter, found));
  }
  CHECK(counter.count() == before);
}

TEST_CASE("per-step evaluation cost is bounded") {
  const auto inst = ProblemInstance::generate(32, 4, HeightMode::linear, 3);
  EAConfig cfg;
  cfg.population_size = 20;
  cfg.window_size = 16;
  cfg.mutation_rate = 1.0 / 32;

  Rng rng(55);
  EvalCounter counter;
  std::set<int> found;
  std::vector<Individual> pop;
  for (std::uint32_t i = 0; i < cfg.population_size; ++i) {
    BitString g = BitString::random(32, rng);
    const double f = evaluate(inst, g, rng, counter);
    pop.push_back({std::move(g), f});
  }

  auto pop_mu = pop;
  auto pop_mr = pop;
  for (int step = 0; step < 500; ++step) {
    auto before = counter.count();
    rts_step(pop, inst, cfg, rng, counter, found);
    CHECK(counter.count() - before <= 2);

    before = counter.count();
    mu_1p1_step(pop_mu, inst, cfg, rng, counter, found);
    CHECK(counter.count() - before <= 1);

    before = counter.count();
    rts_mr_step(pop_mr, inst, cfg, rng, counter, found);
    CHECK(counter.count() - before <= 2);
  }
}

TEST_CASE("replacement never lowers total population fitness") {
  const auto inst = ProblemInstance::generate(24, 3, HeightMode::linear, 19);
  EAConfig cfg;
  cfg.population_size = 12;
  cfg.window_size = 12;
  cfg.mutation_rate = 1.0 / 24;

  Rng rng(2);
  EvalCounter counter;
  std::set<int> found;
  std::vector<Individual> pop;
  for (std::uint32_t i = 0; i < cfg.population_size; ++i) {
    BitString g = BitString::random(24, rng);
    const double f = evaluate(inst, g, rng, counter);
    pop.push_back({std::move(g), f});
  }

  double prev = fitness_sum(pop);
  for (int step = 0; step < 300; ++step) {
    rts_step(pop, inst, cfg, rng, counter, found);
    const double cur = fitness_sum(pop);
    CHECK(cur >= prev - 1e-12);
    prev = cur;
  }
  for (int step = 0; step < 300; ++step) {
    mu_1p1_step(pop, inst, cfg, rng, counter, found);
    const double cur = fitness_sum(pop);
    CHECK(cur >= prev - 1e-12);
    prev = cur;
  }
}

TEST_CASE("cluster_by_nearest assigns members to a nearest peak") {
  const auto inst = ProblemInstance::generate(16, 5, HeightMode::equal, 23);
  Rng rng(4);
  std::vector<Individual> pop;
  for (int i = 0; i < 200; ++i) {
    pop.push_back({BitString::random(16, rng), 0.0});
  }
  const auto subs = cluster_by_nearest(pop, inst, rng);
  REQUIRE(subs.size() == 5);
  std::size_t total = 0;
  for (std::size_t p = 0; p < subs.size(); ++p) {
    total += subs[p].size();
    for (std::size_t idx : subs[p]) {
      const auto ties = inst.nearest_peak_indices(pop[idx].genome);
      CHECK(std::count(ties.begin(), ties.end(), static_cast<int>(p + 1)) == 1);
    }
  }
  CHECK(total == pop.size());
}

TEST_CASE("idealized population sizing") {
  CHECK(idealized_population_size(20) == 1729);
  CHECK(idealized_population_size(80) == 10116);
  CHECK(idealized_population_size(1) == 2);
}

TEST_CASE("rts and rts-mr coincide without crossover") {
  const auto inst = ProblemInstance::generate(16, 4, HeightMode::equal, 12);
  EAConfig base;
  base.population_size = 256;
  base.crossover_rate = 0.0;

  // Rare runs lose a basin and time out; average the successful ones.
  auto mean_evals = [&](EAKind kind, std::uint64_t seed_base) {
    EAConfig cfg = base;
    cfg.algorithm = kind;
    double total = 0.0;
    int successes = 0;
    const int runs = 200;
    for (int r = 0; r < runs; ++r) {
      const auto rec = run_ea(inst, cfg, Goal::all_peaks, 5'000'000,
                              seed_base + r);
      if (rec.success) {
        total += static_cast<double>(rec.evals);
        ++successes;
      }
    }
    REQUIRE(successes >= 190);
    return total / successes;
  };

  const double rts_mean = mean_evals(EAKind::rts, 10'000);
  const double mr_mean = mean_evals(EAKind::rts_mr, 20'000);
  CHECK(std::fabs(rts_mean - mr_mean) / rts_mean < 0.25);
}

TEST_CASE("run_ea finds all peaks of a small instance") {
  // Equal heights: unequal ones let other basins' fitter children overwrite
  // low-peak members, which legitimately stalls the non-idealized EAs.
  const auto inst = ProblemInstance::generate(20, 4, HeightMode::equal, 31);
  for (EAKind kind : {EAKind::rts, EAKind::rts_mr, EAKind::mu_1p1,
                      EAKind::idealized}) {
    EAConfig cfg;
    cfg.algorithm = kind;
    cfg.population_size = kind == EAKind::idealized ? 0 : 256;
    const auto rec = run_ea(inst, cfg, Goal::all_peaks, 5'000'000, 99);
    CHECK(rec.success);
    CHECK(rec.peaks_found == std::set<int>{1, 2, 3, 4});
    CHECK(rec.algorithm_id == to_string(kind));
    CHECK(rec.evals <= 5'000'000);
    CHECK(rec.restarts_or_generations > 0);
  }
}

TEST_CASE("run_ea validates its budget and population") {
  const auto inst = ProblemInstance::generate(20, 4, HeightMode::equal, 31);
  EAConfig cfg;
  cfg.population_size = 64;
  CHECK_THROWS_AS(run_ea(inst, cfg, Goal::all_peaks, 63, 1),
                  std::invalid_argument);
  cfg.population_size = 1;
  CHECK_THROWS_AS(run_ea(inst, cfg, Goal::all_peaks, 1000, 1),
                  std::invalid_argument);
  cfg.population_size = 8;
  cfg.window_size = 9;
  CHECK_THROWS_AS(run_ea(inst, cfg, Goal::all_peaks, 1000, 1),
                  std::invalid_argument);
}

TEST_CASE("unsuccessful runs stop exactly at the budget") {
  const auto inst = ProblemInstance::generate(100, 20, HeightMode::equal, 7);
  EAConfig cfg;
  cfg.population_size = 128;
  for (EAKind kind : {EAKind::rts, EAKind::rts_mr, EAKind::mu_1p1}) {
    cfg.algorithm = kind;
    const auto rec = run_ea(inst, cfg, Goal::all_peaks, 2000, 5);
    CHECK_FALSE(rec.success);
    CHECK(rec.evals == 2000);
  }
}

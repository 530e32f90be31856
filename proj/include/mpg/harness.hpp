#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mpg/niching.hpp"
#include "mpg/run_record.hpp"
#include "mpg/sizing.hpp"
#include "mpg/stats.hpp"

namespace mpg {

enum class AlgorithmKind { ms_nahc, ea };

struct AlgorithmSpec {
  std::string id;
  AlgorithmKind kind = AlgorithmKind::ms_nahc;
  EAConfig ea;  // used when kind == ea

  static AlgorithmSpec msnahc();
  static AlgorithmSpec make_ea(EAKind kind, double crossover_rate,
                               std::uint32_t population_size = 0);
};

struct InstanceSpec {
  std::uint32_t L = 100;
  std::uint32_t n = 20;
  HeightMode mode = HeightMode::equal;
  std::uint64_t seed = 0;

  std::string id() const;
  ProblemInstance generate() const;
};

struct ExperimentSpec {
  std::vector<InstanceSpec> instances;
  std::vector<AlgorithmSpec> algorithms;
  std::vector<Goal> goals;
  std::uint32_t runs = 100;
  std::uint64_t budget = 5'000'000;
  std::uint64_t master_seed = 1;
  std::uint32_t repetitions = 1;  // bisection repetitions where relevant
};

// One run of the given algorithm on an already generated instance.
// Fills in the harness-derived parameters (w = min(4n, N), 1/L mutation,
// idealized population formula) before dispatch.
RunRecord run_one(const ProblemInstance& inst, const AlgorithmSpec& algo,
                  Goal goal, std::uint64_t budget, std::uint64_t run_seed);

// Executes every (instance, algorithm, goal) cell of the matrix, `runs`
// runs each with seeds derived from the master seed. Output order is
// canonical (cell, then run index) regardless of worker count.
std::vector<RunRecord> run_matrix(const ExperimentSpec& spec);

// Worker count for the matrix scheduler: MPG_WORKERS, else hardware.
unsigned worker_count();

// Fixed-column CSV for run records; emit-then-parse round-trips the
// records (peaks_found carried as a count).
void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_records_csv(std::istream& in);

void write_summary_json(std::ostream& out, const std::vector<SummaryStats>& stats);
void write_summary_csv(std::ostream& out, const std::vector<SummaryStats>& stats);

// Versioned experiment spec file (JSON).
ExperimentSpec load_experiment_spec(std::istream& in);
void save_experiment_spec(std::ostream& out, const ExperimentSpec& spec);

}  // namespace mpg

#include "mpg/presets.hpp"

#include <algorithm>
#include <stdexcept>

namespace mpg {

namespace {

constexpr std::uint64_t kBudget = 5'000'000;
constexpr std::uint64_t kInstanceSeed = 1;

std::vector<InstanceSpec> instances(std::vector<std::uint32_t> ns,
                                    HeightMode mode) {
  std::vector<InstanceSpec> out;
  out.reserve(ns.size());
  for (std::uint32_t n : ns) {
    out.push_back(InstanceSpec{100, n, mode, kInstanceSeed});
  }
  return out;
}

std::vector<AlgorithmSpec> figure_algorithms() {
  return {AlgorithmSpec::msnahc(),
          AlgorithmSpec::make_ea(EAKind::rts, 0.8),
          AlgorithmSpec::make_ea(EAKind::rts_mr, 0.5),
          AlgorithmSpec::make_ea(EAKind::rts_mr, 0.8),
          AlgorithmSpec::make_ea(EAKind::mu_1p1, 0.0)};
}

// Sizes every zero-population EA per instance by bisection, then runs the
// matrix one instance at a time so infeasible algorithms can be dropped for
// that instance only.
PresetResult run_sized(ExperimentSpec spec, std::uint32_t runs_override) {
  if (runs_override > 0) spec.runs = runs_override;
  if (spec.goals.size() != 1) {
    throw std::logic_error("sized presets use a single goal");
  }
  const Goal goal = spec.goals.front();

  BisectionConfig cfg;
  cfg.runs_per_trial = 30;
  cfg.successes_required = 30;
  cfg.eval_budget = spec.budget;

  PresetResult result;
  for (const InstanceSpec& ispec : spec.instances) {
    const ProblemInstance inst = ispec.generate();

    ExperimentSpec cell = spec;
    cell.instances = {ispec};
    cell.algorithms.clear();
    for (const AlgorithmSpec& algo : spec.algorithms) {
      const bool needs_size = algo.kind == AlgorithmKind::ea &&
                              algo.ea.algorithm != EAKind::idealized &&
                              algo.ea.population_size == 0;
      if (!needs_size) {
        cell.algorithms.push_back(algo);
        continue;
      }
      const RunFactory factory = [&](std::uint32_t pop_size,
                                     std::uint64_t run_seed) {
        AlgorithmSpec sized = algo;
        sized.ea.population_size = pop_size;
        return run_one(inst, sized, goal, spec.budget, run_seed);
      };
      const auto sizing = bisect(
          factory, cfg,
          derive_seed(spec.master_seed, ispec.id(),
                      algo.id + "|sizing|" + to_string(goal), 0));

      SizingOutcome outcome;
      outcome.algorithm_id = algo.id;
      outcome.instance = ispec;
      outcome.goal = goal;
      outcome.feasible = sizing.feasible;
      outcome.population_size = sizing.minimal_size;
      result.sizing.push_back(outcome);

      if (sizing.feasible) {
        AlgorithmSpec sized = algo;
        sized.ea.population_size = sizing.minimal_size;
        cell.algorithms.push_back(sized);
      }
    }

    auto records = run_matrix(cell);
    result.records.insert(result.records.end(),
                          std::make_move_iterator(records.begin()),
                          std::make_move_iterator(records.end()));
  }
  return result;
}

}  // namespace

TheoryRow theory_row(std::uint32_t L, std::uint32_t n, Goal goal,
                     theory::DistanceMode d_mode) {
  TheoryRow row;
  row.L = L;
  row.n = n;
  row.goal = goal;
  row.d_mode = d_mode;
  row.expected_distance = theory::expected_distance(L, n, d_mode);
  row.expected_restarts = goal == Goal::peak_1
                              ? theory::expected_restarts_one_peak(n)
                              : theory::expected_restarts_all(n);
  row.expected_evals = theory::expected_msnahc_evals(L, n, goal, d_mode);
  return row;
}

std::vector<std::string> preset_names() {
  return {"table1",          "table2",       "table3",
          "fig-unequal-best", "fig-equal-all", "fig-idealized"};
}

bool is_preset(const std::string& name) {
  const auto names = preset_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

PresetResult run_preset(const std::string& name, std::uint64_t master_seed,
                        std::uint32_t runs_override) {
  ExperimentSpec spec;
  spec.master_seed = master_seed;
  spec.budget = kBudget;

  if (name == "table1") {
    spec.instances = instances({20, 40, 80, 160, 320}, HeightMode::equal);
    spec.algorithms = {AlgorithmSpec::msnahc()};
    spec.goals = {Goal::peak_1, Goal::all_peaks};
    spec.runs = runs_override > 0 ? runs_override : 100;
    PresetResult result;
    result.records = run_matrix(spec);
    for (const InstanceSpec& ispec : spec.instances) {
      for (Goal goal : spec.goals) {
        result.theory.push_back(theory_row(
            ispec.L, ispec.n, goal, theory::DistanceMode::order_statistic));
      }
    }
    return result;
  }

  if (name == "table2") {
    PresetResult result;
    for (std::uint32_t n : {20u, 40u, 80u, 160u, 320u}) {
      result.theory.push_back(theory_row(100, n, Goal::peak_1,
                                         theory::DistanceMode::order_statistic));
    }
    return result;
  }

  if (name == "table3") {
    spec.instances = instances({20, 40, 80, 160, 320}, HeightMode::linear);
    spec.algorithms = {AlgorithmSpec::msnahc()};
    spec.goals = {Goal::best_peak, Goal::all_peaks};
    spec.runs = runs_override > 0 ? runs_override : 100;
    PresetResult result;
    result.records = run_matrix(spec);
    return result;
  }

  if (name == "fig-unequal-best") {
    spec.instances = instances({20, 40}, HeightMode::linear);
    spec.algorithms = figure_algorithms();
    spec.goals = {Goal::best_peak};
    spec.runs = 30;
    return run_sized(spec, runs_override);
  }

  if (name == "fig-equal-all") {
    spec.instances = instances({20, 40}, HeightMode::equal);
    spec.algorithms = figure_algorithms();
    spec.goals = {Goal::all_peaks};
    spec.runs = 30;
    return run_sized(spec, runs_override);
  }

  if (name == "fig-idealized") {
    spec.instances = instances({20, 40, 80}, HeightMode::equal);
    spec.algorithms = {AlgorithmSpec::msnahc(),
                       AlgorithmSpec::make_ea(EAKind::idealized, 0.8)};
    spec.goals = {Goal::all_peaks};
    spec.runs = runs_override > 0 ? runs_override : 30;
    PresetResult result;
    result.records = run_matrix(spec);
    return result;
  }

  throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace mpg

// Command-line front end: instance generation, single runs, closed-form
// tables, population sizing, benchmark matrices, and record summaries.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mpg/presets.hpp"

namespace {

using namespace mpg;

// Shared instance options: either an instance file or generator parameters.
struct InstanceOptions {
  std::string file;
  std::uint32_t L = 100;
  std::uint32_t n = 20;
  std::string mode = "equal";
  std::uint64_t seed = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--instance", file, "instance file (overrides -L/-n/...)");
    cmd->add_option("-L,--length", L, "bitstring length")->check(CLI::PositiveNumber);
    cmd->add_option("-n,--peaks", n, "number of peaks")->check(CLI::PositiveNumber);
    cmd->add_option("--mode", mode, "height mode: equal or linear")
        ->check(CLI::IsMember({"equal", "linear"}));
    cmd->add_option("--seed", seed, "instance generator seed");
  }

  ProblemInstance make() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw CLI::ValidationError("--instance", "cannot open " + file);
      return ProblemInstance::load(in);
    }
    return ProblemInstance::generate(L, n, height_mode_from_string(mode), seed);
  }
};

struct AlgorithmOptions {
  std::string name = "ms-nahc";
  double crossover_rate = 0.8;
  std::uint32_t population = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("-a,--algorithm", name,
                    "ms-nahc, rts, rts-mr, mu1p1, or idealized")
        ->check(CLI::IsMember({"ms-nahc", "rts", "rts-mr", "mu1p1",
                               "idealized"}));
    cmd->add_option("--pc", crossover_rate, "crossover probability")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("-N,--population", population,
                    "population size (0: sized by formula or required)");
  }

  AlgorithmSpec make() const {
    if (name == "ms-nahc") return AlgorithmSpec::msnahc();
    return AlgorithmSpec::make_ea(ea_kind_from_string(name), crossover_rate,
                                  population);
  }
};

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path == "-") return std::cout;
  file.open(path);
  if (!file) throw CLI::ValidationError("--output", "cannot open " + path);
  return file;
}

nlohmann::json theory_row_json(const TheoryRow& row) {
  return {{"L", row.L},
          {"n", row.n},
          {"goal", to_string(row.goal)},
          {"d_mode", row.d_mode == theory::DistanceMode::conservative
                         ? "conservative"
                         : "order_statistic"},
          {"expected_distance", row.expected_distance},
          {"expected_restarts", row.expected_restarts},
          {"expected_evals", row.expected_evals}};
}

int cmd_gen(const InstanceOptions& inst_opts, const std::string& output) {
  const auto inst = inst_opts.make();
  std::ofstream file;
  inst.save(open_output(output, file));
  return 0;
}

int cmd_run(const InstanceOptions& inst_opts, const AlgorithmOptions& algo_opts,
            const std::string& goal_name, std::uint32_t runs,
            std::uint64_t budget, std::uint64_t master_seed,
            const std::string& output) {
  const auto inst = inst_opts.make();
  const auto algo = algo_opts.make();
  const Goal goal = goal_from_string(goal_name);

  std::vector<RunRecord> records;
  records.reserve(runs);
  for (std::uint32_t run = 0; run < runs; ++run) {
    const std::uint64_t run_seed = derive_seed(
        master_seed, inst.id(), algo.id + "|" + to_string(goal), run);
    RunRecord rec = run_one(inst, algo, goal, budget, run_seed);
    rec.run_index = run;
    records.push_back(std::move(rec));
  }

  std::ofstream file;
  write_records_csv(open_output(output, file), records);
  return 0;
}

int cmd_theory(std::uint32_t L, const std::vector<std::uint32_t>& ns,
               const std::vector<std::string>& goals,
               const std::string& d_mode, const std::string& output) {
  std::vector<theory::DistanceMode> modes;
  if (d_mode == "conservative" || d_mode == "both") {
    modes.push_back(theory::DistanceMode::conservative);
  }
  if (d_mode == "order_statistic" || d_mode == "both") {
    modes.push_back(theory::DistanceMode::order_statistic);
  }

  nlohmann::json rows = nlohmann::json::array();
  for (std::uint32_t n : ns) {
    for (const std::string& goal_name : goals) {
      for (theory::DistanceMode mode : modes) {
        rows.push_back(theory_row_json(
            theory_row(L, n, goal_from_string(goal_name), mode)));
      }
    }
  }
  std::ofstream file;
  open_output(output, file) << rows.dump(2) << '\n';
  return 0;
}

int cmd_bisect(const InstanceOptions& inst_opts,
               const AlgorithmOptions& algo_opts, const std::string& goal_name,
               const BisectionConfig& cfg, std::uint32_t repetitions,
               std::uint64_t master_seed, const std::string& output) {
  const auto inst = inst_opts.make();
  const auto algo = algo_opts.make();
  if (algo.kind != AlgorithmKind::ea) {
    throw CLI::ValidationError("--algorithm", "bisect sizes EAs only");
  }
  const Goal goal = goal_from_string(goal_name);

  const RunFactory factory = [&](std::uint32_t pop_size,
                                 std::uint64_t run_seed) {
    AlgorithmSpec sized = algo;
    sized.ea.population_size = pop_size;
    return run_one(inst, sized, goal, cfg.eval_budget, run_seed);
  };

  nlohmann::json reps = nlohmann::json::array();
  for (std::uint32_t rep = 0; rep < repetitions; ++rep) {
    const auto result = bisect(
        factory, cfg,
        derive_seed(master_seed, inst.id(),
                    algo.id + "|sizing|" + to_string(goal), rep));

    nlohmann::json trace = nlohmann::json::array();
    for (const TrialOutcome& t : result.trace) {
      trace.push_back({{"population_size", t.pop_size},
                       {"passed", t.passed},
                       {"runs_executed", t.runs_executed}});
    }
    nlohmann::json rep_json = {{"feasible", result.feasible},
                               {"trace", trace}};
    if (result.feasible) {
      rep_json["minimal_size"] = result.minimal_size;
      const auto stats = summarize(result.measurement_runs);
      if (!stats.empty() && stats.front().mean) {
        rep_json["measurement_mean_evals"] = *stats.front().mean;
        rep_json["measurement_success_rate"] = stats.front().success_rate;
      }
    }
    reps.push_back(std::move(rep_json));
  }

  const nlohmann::json out = {{"instance", inst.id()},
                              {"algorithm", algo.id},
                              {"goal", to_string(goal)},
                              {"repetitions", reps}};
  std::ofstream file;
  open_output(output, file) << out.dump(2) << '\n';
  return 0;
}

int cmd_bench(const std::string& target, const std::string& out_dir,
              std::uint32_t runs_override, std::uint64_t master_seed,
              bool master_seed_given) {
  PresetResult result;
  if (is_preset(target)) {
    result = run_preset(target, master_seed, runs_override);
  } else {
    std::ifstream in(target);
    if (!in) {
      throw CLI::ValidationError("bench", target +
                                              " is neither a preset nor a "
                                              "readable spec file");
    }
    ExperimentSpec spec = load_experiment_spec(in);
    if (master_seed_given) spec.master_seed = master_seed;
    if (runs_override > 0) spec.runs = runs_override;
    result.records = run_matrix(spec);
  }

  std::filesystem::create_directories(out_dir);
  const auto path = [&](const char* name) {
    return (std::filesystem::path(out_dir) / name).string();
  };

  if (!result.records.empty()) {
    std::ofstream runs_csv(path("runs.csv"));
    write_records_csv(runs_csv, result.records);
    const auto stats = summarize(result.records);
    std::ofstream summary_json(path("summary.json"));
    write_summary_json(summary_json, stats);
    std::ofstream summary_csv(path("summary.csv"));
    write_summary_csv(summary_csv, stats);
  }
  if (!result.sizing.empty()) {
    nlohmann::json sizing = nlohmann::json::array();
    for (const SizingOutcome& s : result.sizing) {
      sizing.push_back({{"algorithm", s.algorithm_id},
                        {"instance", s.instance.id()},
                        {"goal", to_string(s.goal)},
                        {"feasible", s.feasible},
                        {"population_size", s.population_size}});
    }
    std::ofstream sizing_json(path("sizing.json"));
    sizing_json << sizing.dump(2) << '\n';
  }
  if (!result.theory.empty()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const TheoryRow& row : result.theory) {
      rows.push_back(theory_row_json(row));
    }
    std::ofstream theory_json(path("theory.json"));
    theory_json << rows.dump(2) << '\n';
  }
  return 0;
}

int cmd_summarize(const std::string& input, const std::string& format,
                  const std::string& output) {
  std::vector<RunRecord> records;
  if (input == "-") {
    records = read_records_csv(std::cin);
  } else {
    std::ifstream in(input);
    if (!in) throw CLI::ValidationError("summarize", "cannot open " + input);
    records = read_records_csv(in);
  }
  const auto stats = summarize(records);

  std::ofstream file;
  std::ostream& out = open_output(output, file);
  if (format == "json") {
    write_summary_json(out, stats);
  } else {
    write_summary_csv(out, stats);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multimodal problem generator benchmark suite"};
  app.require_subcommand(1);

  // gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "write an instance file");
  InstanceOptions gen_inst;
  gen_inst.attach(gen);
  std::string gen_output = "-";
  gen->add_option("-o,--output", gen_output, "output file, - for stdout");

  // run ---------------------------------------------------------------
  auto* run = app.add_subcommand("run", "run one algorithm on one instance");
  InstanceOptions run_inst;
  run_inst.attach(run);
  AlgorithmOptions run_algo;
  run_algo.attach(run);
  std::string run_goal = "all_peaks";
  run->add_option("-g,--goal", run_goal, "peak_1, best_peak, or all_peaks")
      ->check(CLI::IsMember({"peak_1", "best_peak", "all_peaks"}));
  std::uint32_t run_runs = 1;
  run->add_option("-r,--runs", run_runs, "independent runs")
      ->check(CLI::PositiveNumber);
  std::uint64_t run_budget = 5'000'000;
  run->add_option("-b,--budget", run_budget, "evaluation budget per run");
  std::uint64_t run_master = 1;
  run->add_option("--master-seed", run_master, "master seed for run seeds");
  std::string run_output = "-";
  run->add_option("-o,--output", run_output, "records CSV, - for stdout");

  // theory ------------------------------------------------------------
  auto* theory_cmd = app.add_subcommand("theory", "closed-form table");
  std::uint32_t theory_L = 100;
  theory_cmd->add_option("-L,--length", theory_L, "bitstring length")
      ->check(CLI::PositiveNumber);
  std::vector<std::uint32_t> theory_ns = {20, 40, 80, 160, 320};
  theory_cmd->add_option("-n,--peaks", theory_ns, "peak counts");
  std::vector<std::string> theory_goals = {"peak_1", "all_peaks"};
  theory_cmd->add_option("-g,--goal", theory_goals, "peak_1 and/or all_peaks")
      ->check(CLI::IsMember({"peak_1", "all_peaks"}));
  std::string theory_mode = "order_statistic";
  theory_cmd
      ->add_option("--d-mode", theory_mode,
                   "expected-distance model: conservative, order_statistic, "
                   "or both")
      ->check(CLI::IsMember({"conservative", "order_statistic", "both"}));
  std::string theory_output = "-";
  theory_cmd->add_option("-o,--output", theory_output, "output, - for stdout");

  // bisect ------------------------------------------------------------
  auto* bisect_cmd = app.add_subcommand("bisect", "minimal population sizing");
  InstanceOptions bisect_inst;
  bisect_inst.attach(bisect_cmd);
  AlgorithmOptions bisect_algo;
  bisect_algo.name = "rts";
  bisect_algo.attach(bisect_cmd);
  std::string bisect_goal = "all_peaks";
  bisect_cmd->add_option("-g,--goal", bisect_goal, "goal to size for")
      ->check(CLI::IsMember({"peak_1", "best_peak", "all_peaks"}));
  BisectionConfig bisect_cfg;
  bisect_cmd->add_option("--initial-size", bisect_cfg.initial_size,
                         "starting population size");
  bisect_cmd->add_option("--runs-per-trial", bisect_cfg.runs_per_trial,
                         "runs per trial");
  bisect_cmd->add_option("--successes", bisect_cfg.successes_required,
                         "successes required per trial");
  bisect_cmd->add_option("--threshold", bisect_cfg.relative_threshold,
                         "relative bracket width to stop at");
  bisect_cmd->add_option("-b,--budget", bisect_cfg.eval_budget,
                         "evaluation budget per run");
  bisect_cmd->add_option("--ceiling", bisect_cfg.size_ceiling,
                         "largest population size to try");
  std::uint32_t bisect_reps = 1;
  bisect_cmd->add_option("--repetitions", bisect_reps,
                         "independent bisection repetitions")
      ->check(CLI::PositiveNumber);
  std::uint64_t bisect_master = 1;
  bisect_cmd->add_option("--master-seed", bisect_master,
                         "master seed for run seeds");
  std::string bisect_output = "-";
  bisect_cmd->add_option("-o,--output", bisect_output, "output, - for stdout");

  // bench -------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "run a preset or spec file");
  std::string bench_target;
  bench
      ->add_option("target", bench_target,
                   "preset (table1, table2, table3, fig-unequal-best, "
                   "fig-equal-all, fig-idealized) or spec file")
      ->required();
  std::string bench_out = ".";
  bench->add_option("-o,--out-dir", bench_out, "output directory");
  std::uint32_t bench_runs = 0;
  bench->add_option("-r,--runs", bench_runs,
                    "override runs per cell (0: preset/spec default)");
  std::uint64_t bench_master = 1;
  auto* bench_master_opt =
      bench->add_option("--master-seed", bench_master, "master seed");

  // summarize ----------------------------------------------------------
  auto* summarize_cmd =
      app.add_subcommand("summarize", "aggregate a records CSV");
  std::string summarize_input = "-";
  summarize_cmd->add_option("input", summarize_input,
                            "records CSV, - for stdin");
  std::string summarize_format = "json";
  summarize_cmd->add_option("-f,--format", summarize_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  std::string summarize_output = "-";
  summarize_cmd->add_option("-o,--output", summarize_output,
                            "output, - for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(gen_inst, gen_output);
    if (run->parsed()) {
      return cmd_run(run_inst, run_algo, run_goal, run_runs, run_budget,
                     run_master, run_output);
    }
    if (theory_cmd->parsed()) {
      return cmd_theory(theory_L, theory_ns, theory_goals, theory_mode,
                        theory_output);
    }
    if (bisect_cmd->parsed()) {
      return cmd_bisect(bisect_inst, bisect_algo, bisect_goal, bisect_cfg,
                        bisect_reps, bisect_master, bisect_output);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_target, bench_out, bench_runs, bench_master,
                       bench_master_opt->count() > 0);
    }
    if (summarize_cmd->parsed()) {
      return cmd_summarize(summarize_input, summarize_format,
                           summarize_output);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

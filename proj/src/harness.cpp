#include "mpg/harness.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "mpg/hillclimb.hpp"

namespace mpg {

namespace {

std::string trim_rate(double rate) {
  std::ostringstream os;
  os << rate;
  return os.str();
}

// Round to 6 significant digits for emitted reals.
double sig6(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  const double scale =
      std::pow(10.0, 5 - std::floor(std::log10(std::fabs(v))));
  return std::round(v * scale) / scale;
}

nlohmann::json optional_to_json(const std::optional<double>& v) {
  if (!v) return nullptr;
  return sig6(*v);
}

}  // namespace

AlgorithmSpec AlgorithmSpec::msnahc() {
  AlgorithmSpec spec;
  spec.id = "ms-nahc";
  spec.kind = AlgorithmKind::ms_nahc;
  return spec;
}

AlgorithmSpec AlgorithmSpec::make_ea(EAKind kind, double crossover_rate,
                                     std::uint32_t population_size) {
  AlgorithmSpec spec;
  spec.kind = AlgorithmKind::ea;
  spec.ea.algorithm = kind;
  spec.ea.crossover_rate = crossover_rate;
  spec.ea.population_size = population_size;
  if (kind == EAKind::mu_1p1 || kind == EAKind::idealized) {
    spec.id = to_string(kind);
  } else {
    spec.id = to_string(kind) + "-pc" + trim_rate(crossover_rate);
  }
  return spec;
}

std::string InstanceSpec::id() const {
  return "L" + std::to_string(L) + "-n" + std::to_string(n) + "-" +
         to_string(mode) + "-s" + std::to_string(seed);
}

ProblemInstance InstanceSpec::generate() const {
  return ProblemInstance::generate(L, n, mode, seed);
}

RunRecord run_one(const ProblemInstance& inst, const AlgorithmSpec& algo,
                  Goal goal, std::uint64_t budget, std::uint64_t run_seed) {
  RunRecord rec;
  if (algo.kind == AlgorithmKind::ms_nahc) {
    rec = ms_nahc(inst, goal, budget, run_seed);
  } else {
    rec = run_ea(inst, algo.ea, goal, budget, run_seed);
  }
  rec.algorithm_id = algo.id;
  return rec;
}

unsigned worker_count() {
  if (const char* env = std::getenv("MPG_WORKERS")) {
    const unsigned parsed = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    if (parsed >= 1) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<RunRecord> run_matrix(const ExperimentSpec& spec) {
  if (spec.instances.empty() || spec.algorithms.empty() || spec.goals.empty()) {
    throw std::invalid_argument("run_matrix: empty instance/algorithm/goal list");
  }
  if (spec.runs < 1) throw std::invalid_argument("run_matrix: runs must be >= 1");

  std::vector<ProblemInstance> instances;
  instances.reserve(spec.instances.size());
  for (const InstanceSpec& is : spec.instances) instances.push_back(is.generate());

  struct Job {
    std::size_t instance;
    std::size_t algorithm;
    Goal goal;
    std::uint32_t run_index;
    std::uint64_t run_seed;
  };
  std::vector<Job> jobs;
  jobs.reserve(spec.instances.size() * spec.algorithms.size() *
               spec.goals.size() * spec.runs);
  for (std::size_t ii = 0; ii < spec.instances.size(); ++ii) {
    for (std::size_t ai = 0; ai < spec.algorithms.size(); ++ai) {
      for (Goal goal : spec.goals) {
        const std::string stream_id =
            spec.algorithms[ai].id + "|" + to_string(goal);
        for (std::uint32_t run = 0; run < spec.runs; ++run) {
          jobs.push_back(Job{ii, ai, goal, run,
                             derive_seed(spec.master_seed,
                                         spec.instances[ii].id(), stream_id,
                                         run)});
        }
      }
    }
  }

  // Results land in preassigned slots: output is canonical no matter how
  // the jobs are scheduled.
  std::vector<RunRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t j = next.fetch_add(1);
      if (j >= jobs.size()) return;
      const Job& job = jobs[j];
      RunRecord rec = run_one(instances[job.instance],
                              spec.algorithms[job.algorithm], job.goal,
                              spec.budget, job.run_seed);
      rec.run_index = job.run_index;
      records[j] = std::move(rec);
    }
  };

  const unsigned workers =
      std::min<std::size_t>(worker_count(), jobs.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return records;
}

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "instance_L,instance_n,height_mode,instance_seed,algorithm,goal,"
         "run_index,run_seed,evals,restarts_or_generations,success,"
         "peaks_found_count\n";
  for (const RunRecord& r : records) {
    out << r.instance_L << ',' << r.instance_n << ',' << to_string(r.height_mode)
        << ',' << r.instance_seed << ',' << r.algorithm_id << ','
        << to_string(r.goal) << ',' << r.run_index << ',' << r.run_seed << ','
        << r.evals << ',' << r.restarts_or_generations << ','
        << (r.success ? 1 : 0) << ',' << r.peaks_found.size() << '\n';
  }
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
  std::vector<RunRecord> records;
  std::string line;
  if (!std::getline(in, line)) return records;  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 12) {
      throw std::invalid_argument("records CSV: expected 12 columns");
    }
    RunRecord r;
    r.instance_L = static_cast<std::uint32_t>(std::stoul(fields[0]));
    r.instance_n = static_cast<std::uint32_t>(std::stoul(fields[1]));
    r.height_mode = height_mode_from_string(fields[2]);
    r.instance_seed = std::stoull(fields[3]);
    r.algorithm_id = fields[4];
    r.goal = goal_from_string(fields[5]);
    r.run_index = static_cast<std::uint32_t>(std::stoul(fields[6]));
    r.run_seed = std::stoull(fields[7]);
    r.evals = std::stoull(fields[8]);
    r.restarts_or_generations = std::stoull(fields[9]);
    r.success = fields[10] == "1";
    // peaks_found carried as a count: reconstruct 1..count placeholders so
    // the count round-trips.
    const int count = std::stoi(fields[11]);
    for (int i = 1; i <= count; ++i) r.peaks_found.insert(i);
    records.push_back(std::move(r));
  }
  return records;
}

void write_summary_json(std::ostream& out, const std::vector<SummaryStats>& stats) {
  nlohmann::json j = nlohmann::json::array();
  for (const SummaryStats& s : stats) {
    j.push_back({{"instance_L", s.instance_L},
                 {"instance_n", s.instance_n},
                 {"height_mode", to_string(s.height_mode)},
                 {"instance_seed", s.instance_seed},
                 {"algorithm", s.algorithm_id},
                 {"goal", to_string(s.goal)},
                 {"count", s.count},
                 {"successes", s.successes},
                 {"success_rate", sig6(s.success_rate)},
                 {"mean", optional_to_json(s.mean)},
                 {"min", optional_to_json(s.min)},
                 {"q1", optional_to_json(s.q1)},
                 {"median", optional_to_json(s.median)},
                 {"q3", optional_to_json(s.q3)},
                 {"max", optional_to_json(s.max)},
                 {"mean_restarts", optional_to_json(s.mean_restarts)}});
  }
  out << j.dump(2) << '\n';
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryStats>& stats) {
  out << "instance_L,instance_n,height_mode,instance_seed,algorithm,goal,count,"
         "successes,success_rate,mean,min,q1,median,q3,max,mean_restarts\n";
  auto field = [&](const std::optional<double>& v) -> std::string {
    if (!v) return "";
    std::ostringstream os;
    os << sig6(*v);
    return os.str();
  };
  for (const SummaryStats& s : stats) {
    out << s.instance_L << ',' << s.instance_n << ',' << to_string(s.height_mode)
        << ',' << s.instance_seed << ',' << s.algorithm_id << ','
        << to_string(s.goal) << ',' << s.count << ',' << s.successes << ','
        << sig6(s.success_rate) << ',' << field(s.mean) << ',' << field(s.min)
        << ',' << field(s.q1) << ',' << field(s.median) << ',' << field(s.q3)
        << ',' << field(s.max) << ',' << field(s.mean_restarts) << '\n';
  }
}

namespace {

nlohmann::json algorithm_to_json(const AlgorithmSpec& a) {
  nlohmann::json j;
  j["id"] = a.id;
  j["kind"] = a.kind == AlgorithmKind::ms_nahc ? "ms_nahc" : "ea";
  if (a.kind == AlgorithmKind::ea) {
    j["algorithm"] = to_string(a.ea.algorithm);
    j["population_size"] = a.ea.population_size;
    j["crossover_rate"] = a.ea.crossover_rate;
    j["mutation_rate"] = a.ea.mutation_rate;
    j["window_size"] = a.ea.window_size;
    j["tournament_size"] = a.ea.tournament_size;
  }
  return j;
}

AlgorithmSpec algorithm_from_json(const nlohmann::json& j) {
  AlgorithmSpec a;
  a.id = j.at("id").get<std::string>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "ms_nahc") {
    a.kind = AlgorithmKind::ms_nahc;
  } else if (kind == "ea") {
    a.kind = AlgorithmKind::ea;
    a.ea.algorithm = ea_kind_from_string(j.at("algorithm").get<std::string>());
    a.ea.population_size = j.value("population_size", 0u);
    a.ea.crossover_rate = j.value("crossover_rate", 0.8);
    a.ea.mutation_rate = j.value("mutation_rate", 0.0);
    a.ea.window_size = j.value("window_size", 0u);
    a.ea.tournament_size = j.value("tournament_size", 2u);
  } else {
    throw std::invalid_argument("experiment spec: unknown algorithm kind");
  }
  return a;
}

}  // namespace

ExperimentSpec load_experiment_spec(std::istream& in) {
  nlohmann::json j = nlohmann::json::parse(in);
  if (j.at("format_version").get<int>() != 1) {
    throw std::invalid_argument("experiment spec: unsupported format_version");
  }
  ExperimentSpec spec;
  for (const auto& ij : j.at("instances")) {
    InstanceSpec is;
    is.L = ij.at("L").get<std::uint32_t>();
    is.n = ij.at("n").get<std::uint32_t>();
    is.mode = height_mode_from_string(ij.at("height_mode").get<std::string>());
    is.seed = ij.at("seed").get<std::uint64_t>();
    spec.instances.push_back(is);
  }
  for (const auto& aj : j.at("algorithms")) {
    spec.algorithms.push_back(algorithm_from_json(aj));
  }
  for (const auto& gj : j.at("goals")) {
    spec.goals.push_back(goal_from_string(gj.get<std::string>()));
  }
  spec.runs = j.value("runs", 100u);
  spec.budget = j.value("budget", std::uint64_t{5'000'000});
  spec.master_seed = j.value("master_seed", std::uint64_t{1});
  spec.repetitions = j.value("repetitions", 1u);
  return spec;
}

void save_experiment_spec(std::ostream& out, const ExperimentSpec& spec) {
  nlohmann::json j;
  j["format_version"] = 1;
  auto& instances = j["instances"] = nlohmann::json::array();
  for (const InstanceSpec& is : spec.instances) {
    instances.push_back({{"L", is.L},
                         {"n", is.n},
                         {"height_mode", to_string(is.mode)},
                         {"seed", is.seed}});
  }
  auto& algorithms = j["algorithms"] = nlohmann::json::array();
  for (const AlgorithmSpec& a : spec.algorithms) {
    algorithms.push_back(algorithm_to_json(a));
  }
  auto& goals = j["goals"] = nlohmann::json::array();
  for (Goal g : spec.goals) goals.push_back(to_string(g));
  j["runs"] = spec.runs;
  j["budget"] = spec.budget;
  j["master_seed"] = spec.master_seed;
  j["repetitions"] = spec.repetitions;
  out << j.dump(2) << '\n';
}

}  // namespace mpg

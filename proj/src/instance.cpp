#include "mpg/instance.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace mpg {

std::string to_string(HeightMode mode) {
  return mode == HeightMode::equal ? "equal" : "linear";
}

std::string to_string(Goal goal) {
  switch (goal) {
    case Goal::peak_1: return "peak_1";
    case Goal::best_peak: return "best_peak";
    case Goal::all_peaks: return "all_peaks";
  }
  throw std::logic_error("unknown goal");
}

HeightMode height_mode_from_string(std::string_view s) {
  if (s == "equal") return HeightMode::equal;
  if (s == "linear" || s == "unequal") return HeightMode::linear;
  throw std::invalid_argument("unknown height mode: " + std::string(s));
}

Goal goal_from_string(std::string_view s) {
  if (s == "peak_1") return Goal::peak_1;
  if (s == "best_peak") return Goal::best_peak;
  if (s == "all_peaks") return Goal::all_peaks;
  throw std::invalid_argument("unknown goal: " + std::string(s));
}

namespace {

double peak_height(HeightMode mode, std::uint32_t index_1based, std::uint32_t n) {
  if (mode == HeightMode::equal || n == 1) return 1.0;
  return 0.5 + 0.5 * static_cast<double>(index_1based - 1) / (n - 1);
}

}  // namespace

ProblemInstance ProblemInstance::generate(std::uint32_t L, std::uint32_t n,
                                          HeightMode mode, std::uint64_t seed) {
  if (L == 0) throw std::invalid_argument("generate: L must be positive");
  if (n == 0) throw std::invalid_argument("generate: n must be positive");

  ProblemInstance inst;
  inst.L_ = L;
  inst.n_ = n;
  inst.mode_ = mode;
  inst.seed_ = seed;

  Rng rng(seed);
  inst.peaks_.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    inst.peaks_.push_back(
        Peak{BitString::random(L, rng), peak_height(mode, i, n),
             static_cast<int>(i)});
  }
  inst.max_height_ = 1.0;
  inst.build_location_index();
  return inst;
}

void ProblemInstance::build_location_index() {
  location_index_.clear();
  for (const Peak& p : peaks_) {
    location_index_[p.location].push_back(p.index);
  }
}

ProblemInstance::Nearest ProblemInstance::nearest(const BitString& x) const {
  if (x.length() != L_) {
    throw std::invalid_argument("nearest: string length does not match instance");
  }
  Nearest result;
  result.distance = L_ + 1;
  for (const Peak& p : peaks_) {
    const std::size_t d = x.hamming(p.location);
    if (d < result.distance) {
      result.distance = d;
      result.indices.clear();
      result.indices.push_back(p.index);
    } else if (d == result.distance) {
      result.indices.push_back(p.index);
    }
  }
  return result;
}

std::vector<int> ProblemInstance::nearest_peak_indices(const BitString& x) const {
  return nearest(x).indices;
}

const std::vector<int>& ProblemInstance::peak_indices_at(const BitString& x) const {
  static const std::vector<int> empty;
  auto it = location_index_.find(x);
  return it == location_index_.end() ? empty : it->second;
}

std::string ProblemInstance::id() const {
  return "L" + std::to_string(L_) + "-n" + std::to_string(n_) + "-" +
         to_string(mode_) + "-s" + std::to_string(seed_);
}

void ProblemInstance::save(std::ostream& out) const {
  nlohmann::json j;
  j["format_version"] = 1;
  j["L"] = L_;
  j["n"] = n_;
  j["height_mode"] = to_string(mode_);
  j["generator_seed"] = seed_;
  auto& peaks = j["peaks"] = nlohmann::json::array();
  for (const Peak& p : peaks_) {
    peaks.push_back({{"bits", p.location.str()}, {"height", p.height}});
  }
  out << j.dump(2) << '\n';
}

ProblemInstance ProblemInstance::load(std::istream& in) {
  nlohmann::json j = nlohmann::json::parse(in);
  if (j.at("format_version").get<int>() != 1) {
    throw std::invalid_argument("instance file: unsupported format_version");
  }
  ProblemInstance inst;
  inst.L_ = j.at("L").get<std::uint32_t>();
  inst.n_ = j.at("n").get<std::uint32_t>();
  inst.mode_ = height_mode_from_string(j.at("height_mode").get<std::string>());
  inst.seed_ = j.at("generator_seed").get<std::uint64_t>();
  int index = 1;
  for (const auto& p : j.at("peaks")) {
    BitString bits = BitString::parse(p.at("bits").get<std::string>());
    if (bits.length() != inst.L_) {
      throw std::invalid_argument("instance file: peak length does not match L");
    }
    inst.peaks_.push_back(Peak{std::move(bits), p.at("height").get<double>(), index++});
  }
  if (inst.peaks_.size() != inst.n_) {
    throw std::invalid_argument("instance file: peak count does not match n");
  }
  inst.max_height_ = 1.0;
  inst.build_location_index();
  return inst;
}

double evaluate(const ProblemInstance& inst, const BitString& x, Rng& rng,
                EvalCounter& counter) {
  if (x.length() != inst.length()) {
    throw std::invalid_argument("evaluate: string length does not match instance");
  }
  counter.consume();
  // Single allocation-free pass; ties resolved uniformly by reservoir.
  std::size_t best = inst.length() + 1;
  int chosen = 0;
  std::uint64_t ties = 0;
  for (const Peak& p : inst.peaks()) {
    const std::size_t d = x.hamming(p.location);
    if (d < best) {
      best = d;
      chosen = p.index;
      ties = 1;
    } else if (d == best && rng.next_below(++ties) == 0) {
      chosen = p.index;
    }
  }
  const double L = inst.length();
  return (L - static_cast<double>(best)) / L * inst.peak(chosen).height;
}

double fitness_lowest_index(const ProblemInstance& inst, const BitString& x) {
  const auto near = inst.nearest(x);
  const int chosen = *std::min_element(near.indices.begin(), near.indices.end());
  const double L = inst.length();
  return (L - static_cast<double>(near.distance)) / L * inst.peak(chosen).height;
}

bool goal_reached(const ProblemInstance& inst, const std::set<int>& found,
                  Goal goal) {
  switch (goal) {
    case Goal::peak_1:
      return found.count(1) != 0;
    case Goal::best_peak:
      for (int i : found) {
        if (inst.peak(i).height == inst.max_height()) return true;
      }
      return false;
    case Goal::all_peaks:
      return found.size() == inst.num_peaks();
  }
  throw std::logic_error("unknown goal");
}

}  // namespace mpg

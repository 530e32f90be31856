#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mpg/bitstring.hpp"
#include "mpg/eval_counter.hpp"
#include "mpg/rng.hpp"

namespace mpg {

enum class HeightMode { equal, linear };
enum class Goal { peak_1, best_peak, all_peaks };

std::string to_string(HeightMode mode);
std::string to_string(Goal goal);
HeightMode height_mode_from_string(std::string_view s);
Goal goal_from_string(std::string_view s);

struct Peak {
  BitString location;
  double height = 1.0;  // in [0.5, 1.0]
  int index = 0;        // 1-based
};

// A multimodal landscape: n random peak strings of length L. The fitness
// of x is its proximity to the nearest peak scaled by that peak's height.
// Immutable after creation and safely shareable across concurrent runs.
class ProblemInstance {
 public:
  static ProblemInstance generate(std::uint32_t L, std::uint32_t n,
                                  HeightMode mode, std::uint64_t seed);

  std::uint32_t length() const { return L_; }
  std::uint32_t num_peaks() const { return n_; }
  HeightMode height_mode() const { return mode_; }
  std::uint64_t generator_seed() const { return seed_; }
  const std::vector<Peak>& peaks() const { return peaks_; }
  const Peak& peak(int index) const { return peaks_.at(index - 1); }  // 1-based
  double max_height() const { return max_height_; }

  struct Nearest {
    std::size_t distance = 0;
    std::vector<int> indices;  // all 1-based indices at minimal distance
  };
  Nearest nearest(const BitString& x) const;
  std::vector<int> nearest_peak_indices(const BitString& x) const;

  // 1-based indices of peaks located exactly at x; empty if none. Ground
  // truth lookup, consumes no evaluations.
  const std::vector<int>& peak_indices_at(const BitString& x) const;

  // Stable identifier, e.g. "L100-n20-equal-s42".
  std::string id() const;

  // Versioned instance file (JSON).
  void save(std::ostream& out) const;
  static ProblemInstance load(std::istream& in);

 private:
  ProblemInstance() = default;
  void build_location_index();

  std::uint32_t L_ = 0;
  std::uint32_t n_ = 0;
  HeightMode mode_ = HeightMode::equal;
  std::uint64_t seed_ = 0;
  double max_height_ = 1.0;
  std::vector<Peak> peaks_;
  std::unordered_map<BitString, std::vector<int>, BitStringHash> location_index_;
};

// Tie-broken fitness: picks one nearest peak uniformly at random and
// returns ((L - d)/L) * height. Consumes exactly one evaluation.
double evaluate(const ProblemInstance& inst, const BitString& x, Rng& rng,
                EvalCounter& counter);

// Deterministic variant resolving ties to the lowest peak index, outside
// any counter. For property checks only; algorithms never use it.
double fitness_lowest_index(const ProblemInstance& inst, const BitString& x);

bool goal_reached(const ProblemInstance& inst, const std::set<int>& found,
                  Goal goal);

}  // namespace mpg

#pragma once

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <vector>

namespace mpg {

// SplitMix64 stream. Self-contained so every draw is bit-for-bit
// reproducible across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), unbiased via rejection.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = -n % n;  // 2^64 mod n
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe as a log() argument.
  double next_unit_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  bool next_bool() { return next_u64() >> 63; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[next_below(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

// Stable derivation of a run seed from the (master, instance, algorithm,
// run index) tuple. Fixed across versions; distinct tuples give distinct
// streams with overwhelming probability.
std::uint64_t derive_seed(std::uint64_t master, std::string_view instance_id,
                          std::string_view algorithm_id, std::uint64_t run_index);

// Splits a seed into independent numbered sub-streams.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t lane);

}  // namespace mpg

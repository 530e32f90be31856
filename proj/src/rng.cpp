#include "mpg/rng.hpp"

namespace mpg {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view instance_id,
                          std::string_view algorithm_id, std::uint64_t run_index) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ fnv1a(instance_id));
  h = mix64(h ^ fnv1a(algorithm_id));
  h = mix64(h ^ run_index);
  return h;
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t lane) {
  return mix64(mix64(seed) ^ (lane + 0x9e3779b97f4a7c15ull));
}

}  // namespace mpg

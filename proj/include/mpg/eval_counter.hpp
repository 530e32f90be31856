#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace mpg {

inline constexpr std::uint64_t kUnlimitedBudget =
    std::numeric_limits<std::uint64_t>::max();

// Monotone count of fitness evaluations, the sole cost measure. A run is
// stopped at the first point a new evaluation would exceed the budget, so
// recorded eval counts never pass it.
class EvalCounter {
 public:
  EvalCounter() = default;
  explicit EvalCounter(std::uint64_t budget) : budget_(budget) {}

  std::uint64_t count() const { return count_; }
  std::uint64_t budget() const { return budget_; }
  bool exhausted() const { return count_ >= budget_; }

  // Call sites check exhausted() first; consuming past the budget is a bug.
  void consume() {
    if (count_ >= budget_) {
      throw std::logic_error("EvalCounter: evaluation past the budget");
    }
    ++count_;
  }

 private:
  std::uint64_t count_ = 0;
  std::uint64_t budget_ = kUnlimitedBudget;
};

}  // namespace mpg

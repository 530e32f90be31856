#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "mpg/bitstring.hpp"
#include "mpg/theory.hpp"

using namespace mpg;
using namespace mpg::theory;

namespace {

constexpr double kGamma = 0.57721566490153286060651209;

double harmonic_brute(unsigned m) {
  double h = 0.0;
  for (unsigned k = 1; k <= m; ++k) h += 1.0 / k;
  return h;
}

}  // namespace

TEST_CASE("generalized harmonic matches integer partial sums") {
  for (unsigned m = 0; m <= 200; ++m) {
    CHECK(harmonic(m) == doctest::Approx(harmonic_brute(m)).epsilon(1e-12));
  }
}

TEST_CASE("expected_nahc_evals closed form") {
  CHECK(expected_nahc_evals(100, 1.0) == doctest::Approx(101.0));

  // d = 40: 1 + 2.5 + 99 * H_39, H_39 by brute force.
  const double expected = 1.0 + 2.5 + 99.0 * harmonic_brute(39);
  CHECK(expected_nahc_evals(100, 40.0) == doctest::Approx(expected).epsilon(1e-9));
  CHECK(expected_nahc_evals(100, 40.0) == doctest::Approx(424.6).epsilon(1e-3));

  CHECK_THROWS_AS(expected_nahc_evals(100, 0.5), std::domain_error);
  CHECK_THROWS_AS(expected_nahc_evals(100, 101.0), std::domain_error);
}

TEST_CASE("expected_nahc_evals cross-checks the printed theory column") {
  // 20 restarts at the n=20 order-statistic distance land near 8540.
  const double evals = 20.0 * expected_nahc_evals(100, 40.65);
  CHECK(std::fabs(evals - 8540.0) / 8540.0 < 0.01);
}

TEST_CASE("expected restarts") {
  CHECK(expected_restarts_one_peak(1) == 1.0);
  CHECK(expected_restarts_one_peak(20) == 20.0);
  CHECK(expected_restarts_one_peak(320) == 320.0);

  CHECK(expected_restarts_all(1) == 1.0);
  CHECK(expected_restarts_all(20) == doctest::Approx(72.0).epsilon(0.05 / 72.0));
  CHECK(expected_restarts_all(320) ==
        doctest::Approx(2031.1).epsilon(0.5 / 2031.1));
}

TEST_CASE("inverse normal quantile") {
  CHECK(std::fabs(inverse_normal_cdf(0.5)) < 1e-12);
  CHECK(inverse_normal_cdf(0.975) == doctest::Approx(1.959964).epsilon(1e-5));
  CHECK(inverse_normal_cdf(0.625 / 20.25) == doctest::Approx(-1.87).epsilon(0.002));

  // Round trip against the erfc-based CDF.
  for (double q : {1e-9, 1e-6, 1e-3, 0.02, 0.1, 0.3, 0.5, 0.7, 0.9, 0.975,
                   0.999, 1.0 - 1e-6}) {
    CHECK(std::fabs(normal_cdf(inverse_normal_cdf(q)) - q) <= 1e-8);
  }

  CHECK_THROWS_AS(inverse_normal_cdf(0.0), std::domain_error);
  CHECK_THROWS_AS(inverse_normal_cdf(1.0), std::domain_error);
  CHECK_THROWS_AS(inverse_normal_cdf(-0.5), std::domain_error);
}

TEST_CASE("Blom order statistic mean") {
  CHECK(order_statistic_mean(1, 20, 50.0, 5.0) ==
        doctest::Approx(40.6588).epsilon(1e-4));
  // High-precision reference value; the printed 35.45 in the source table
  // is not reproducible from the formula (see acceptance notes).
  CHECK(order_statistic_mean(1, 320, 50.0, 5.0) ==
        doctest::Approx(35.5706).epsilon(1e-4));
  CHECK(order_statistic_mean(1, 1, 12.0, 3.0) == doctest::Approx(12.0));
  CHECK_THROWS_AS(order_statistic_mean(0, 5, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(order_statistic_mean(6, 5, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("expected_msnahc_evals") {
  CHECK(std::fabs(expected_msnahc_evals(100, 20, Goal::peak_1,
                                        DistanceMode::order_statistic) -
                  8540.0) /
            8540.0 <
        0.02);
  CHECK(std::fabs(expected_msnahc_evals(100, 20, Goal::all_peaks,
                                        DistanceMode::order_statistic) -
                  30726.0) /
            30726.0 <
        0.02);
  CHECK(expected_msnahc_evals(100, 1, Goal::peak_1, DistanceMode::conservative) ==
        doctest::Approx(expected_nahc_evals(100, 50.0)));
  CHECK_THROWS_AS(expected_msnahc_evals(100, 20, Goal::best_peak,
                                        DistanceMode::conservative),
                  std::invalid_argument);
}

TEST_CASE("expected_nahc_evals strictly increasing in d") {
  double prev = expected_nahc_evals(100, 1.0);
  for (double d = 1.5; d <= 100.0; d += 0.5) {
    const double cur = expected_nahc_evals(100, d);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("coupon collector asymptotics") {
  for (unsigned n : {20u, 50u, 100u, 320u, 1000u}) {
    const double exact = expected_restarts_all(n);
    const double asymptotic = n * (std::log(n) + kGamma);
    CHECK(std::fabs(exact - asymptotic) <= 0.51);
  }
}

TEST_CASE("first order statistic decreasing in sample count") {
  double prev = order_statistic_mean(1, 2, 50.0, 5.0);
  for (unsigned n = 3; n <= 400; ++n) {
    const double cur = order_statistic_mean(1, n, 50.0, 5.0);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("asymptotic upper bound at d = L/2") {
  for (unsigned L = 8; L <= 4096; L *= 2) {
    const double value = expected_nahc_evals(L, L / 2.0);
    const double bound = 3.0 + (L - 1.0) * (1.0 + std::log2(L / 2.0 - 1.0));
    CHECK(value <= bound);
  }
  // Odd doubling path: cover non-power-of-two even L as well.
  for (unsigned L = 10; L <= 4096; L = 2 * L + 2) {
    CHECK(expected_nahc_evals(L, L / 2.0) <=
          3.0 + (L - 1.0) * (1.0 + std::log2(L / 2.0 - 1.0)));
  }
}

TEST_CASE("Blom approximation vs empirical binomial minimum") {
  Rng rng(20240817);
  // Distance between two random 100-bit strings = ones in 100 fair bits.
  auto binomial100 = [&rng]() {
    return std::popcount(rng.next_u64()) +
           std::popcount(rng.next_u64() & ((std::uint64_t{1} << 36) - 1));
  };
  for (unsigned n : {20u, 320u}) {
    const int trials = 100000;
    double sum = 0.0;
    for (int t = 0; t < trials; ++t) {
      int min_d = 100;
      for (unsigned i = 0; i < n; ++i) min_d = std::min(min_d, binomial100());
      sum += static_cast<double>(min_d);
    }
    const double empirical = sum / trials;
    CHECK(std::fabs(empirical - order_statistic_mean(1, n, 50.0, 5.0)) < 0.5);
  }
}

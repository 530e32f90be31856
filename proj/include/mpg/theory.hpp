#pragma once

#include <cstdint>

#include "mpg/instance.hpp"

namespace mpg::theory {

// Digamma function, accurate to ~1e-12 for x > 0.
double digamma(double x);

// Generalized harmonic number H_x = digamma(x + 1) + gamma, x >= 0.
// Matches the integer partial sums exactly (to rounding).
double harmonic(double x);

// Expected evaluations for next-ascent hillclimbing started d bits from
// the top of a single peak of length L:
//   1 + L/d + sum_{k=1}^{d-1} (L-1)/k
// Fractional d uses the generalized harmonic number.
double expected_nahc_evals(std::uint32_t L, double d);

// Expected NAHC calls to reach one particular peak of n: n.
double expected_restarts_one_peak(std::uint32_t n);

// Expected NAHC calls to reach all n peaks: n * H_n (coupon collector).
double expected_restarts_all(std::uint32_t n);

// Standard normal CDF.
double normal_cdf(double x);

// Standard normal quantile, absolute error <= 1e-8. Domain (0, 1).
double inverse_normal_cdf(double q);

// Blom approximation to the expected r-th order statistic of n samples of
// Normal(mu, sigma): mu + Phi^-1((r - 0.375)/(n - 0.75 + 1)) * sigma.
double order_statistic_mean(std::uint32_t r, std::uint32_t n, double mu,
                            double sigma);

enum class DistanceMode { conservative, order_statistic };

// Expected start-to-top distance on an (L, n) instance: L/2, or the Blom
// first-order-statistic estimate of the minimum of n Binomial(L, 1/2)
// distances under the normal approximation.
double expected_distance(std::uint32_t L, std::uint32_t n, DistanceMode mode);

// Expected MS-NAHC evaluations: restarts(goal) * expected_nahc_evals(L, d).
// Goal must be peak_1 or all_peaks.
double expected_msnahc_evals(std::uint32_t L, std::uint32_t n, Goal goal,
                             DistanceMode mode);

}  // namespace mpg::theory

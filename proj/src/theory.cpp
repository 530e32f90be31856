#include "mpg/theory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mpg::theory {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209;

}  // namespace

double digamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("digamma: requires x > 0");
  double result = 0.0;
  // Shift into the asymptotic regime.
  while (x < 8.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  // Asymptotic series with Bernoulli-number coefficients.
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  result += std::log(x) - 0.5 * inv -
            inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 -
                    inv2 * (1.0 / 240 - inv2 * (1.0 / 132)))));
  return result;
}

double harmonic(double x) {
  if (x < 0.0) throw std::domain_error("harmonic: requires x >= 0");
  if (x == 0.0) return 0.0;
  return digamma(x + 1.0) + kEulerGamma;
}

double expected_nahc_evals(std::uint32_t L, double d) {
  if (d < 1.0) throw std::domain_error("expected_nahc_evals: requires d >= 1");
  if (d > L) throw std::domain_error("expected_nahc_evals: requires d <= L");
  return 1.0 + L / d + (L - 1.0) * harmonic(d - 1.0);
}

double expected_restarts_one_peak(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("expected_restarts_one_peak: n >= 1");
  return static_cast<double>(n);
}

double expected_restarts_all(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("expected_restarts_all: n >= 1");
  double h = 0.0;
  for (std::uint32_t k = 1; k <= n; ++k) h += 1.0 / k;
  return n * h;
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double inverse_normal_cdf(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::domain_error("inverse_normal_cdf: requires 0 < q < 1");
  }

  // Acklam's rational approximation (relative error < 1.15e-9) ...
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double q_low = 0.02425;

  double x;
  if (q < q_low) {
    const double u = std::sqrt(-2.0 * std::log(q));
    x = (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
        ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
  } else if (q <= 1.0 - q_low) {
    const double u = q - 0.5;
    const double r = u * u;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * u /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double u = std::sqrt(-2.0 * std::log(1.0 - q));
    x = -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
        ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
  }

  // ... plus one Halley step against erfc-based Phi.
  const double e = normal_cdf(x) - q;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(x * x / 2.0);
  x -= u / (1.0 + x * u / 2.0);
  return x;
}

double order_statistic_mean(std::uint32_t r, std::uint32_t n, double mu,
                            double sigma) {
  if (r < 1 || r > n) {
    throw std::invalid_argument("order_statistic_mean: requires 1 <= r <= n");
  }
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("order_statistic_mean: requires sigma > 0");
  }
  constexpr double alpha = 0.375;
  const double q = (r - alpha) / (n - 2.0 * alpha + 1.0);
  return mu + inverse_normal_cdf(q) * sigma;
}

double expected_distance(std::uint32_t L, std::uint32_t n, DistanceMode mode) {
  if (mode == DistanceMode::conservative) return L / 2.0;
  return order_statistic_mean(1, n, L / 2.0, std::sqrt(L / 4.0));
}

double expected_msnahc_evals(std::uint32_t L, std::uint32_t n, Goal goal,
                             DistanceMode mode) {
  double restarts;
  switch (goal) {
    case Goal::peak_1:
      restarts = expected_restarts_one_peak(n);
      break;
    case Goal::all_peaks:
      restarts = expected_restarts_all(n);
      break;
    default:
      throw std::invalid_argument(
          "expected_msnahc_evals: goal must be peak_1 or all_peaks");
  }
  return restarts * expected_nahc_evals(L, expected_distance(L, n, mode));
}

}  // namespace mpg::theory

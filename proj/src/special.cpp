#include "dta/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dta {

namespace {
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;
}

double stirling_correction(double x) {
  // delta(x) in log Gamma(x) = (x-1/2) log x - x + log sqrt(2 pi) + delta(x).
  // Series truncation error is below 1e-13 for x >= 10.
  const double r = 1.0 / x;
  const double r2 = r * r;
  return r *
         (1.0 / 12.0 +
          r2 * (-1.0 / 360.0 +
                r2 * (1.0 / 1260.0 + r2 * (-1.0 / 1680.0 + r2 / 1188.0))));
}

double log_beta_fn(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("log_beta_fn: arguments must be positive");
  if (a + b <= 20.0) return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  // Lift the small argument with B(a,b) = B(a+1,b) (a+b)/a until the
  // asymptotic form applies.
  double shift = 0.0;
  while (std::min(a, b) < 10.0) {
    if (a < b) {
      shift += std::log1p(b / a);
      a += 1.0;
    } else {
      shift += std::log1p(a / b);
      b += 1.0;
    }
  }
  const double s = a + b;
  double core = kLogSqrt2Pi + (a - 0.5) * std::log(a / s) +
                (b - 0.5) * std::log(b / s) - 0.5 * std::log(s) +
                stirling_correction(a) + stirling_correction(b) -
                stirling_correction(s);
  return core + shift;
}

double log_sum_exp(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("log_sum_exp: empty input");
  double m = -std::numeric_limits<double>::infinity();
  for (double v : values) m = std::max(m, v);
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double v : values) s += std::exp(v - m);
  return m + std::log(s);
}

double log_sum_exp(const std::vector<double>& values) {
  return log_sum_exp(std::span<const double>(values));
}

double log_sum_exp(double a, double b) {
  const double arr[2] = {a, b};
  return log_sum_exp(std::span<const double>(arr, 2));
}

double log_binomial_coef(long n, long k) {
  if (k < 0 || n < 0 || k > n)
    throw std::invalid_argument("log_binomial_coef: need 0 <= k <= n");
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double log_gen_binomial_coef(double c, long t) {
  if (!(c > 0.0) || t < 0)
    throw std::invalid_argument("log_gen_binomial_coef: need c > 0, t >= 0");
  return std::lgamma(c + static_cast<double>(t)) -
         std::lgamma(static_cast<double>(t) + 1.0) - std::lgamma(c);
}

double log_normal_pdf(double x, double mean, double var) {
  const double d = x - mean;
  return -0.5 * std::log(2.0 * M_PI * var) - 0.5 * d * d / var;
}

}  // namespace dta

#ifndef DTA_SPECIAL_HPP
#define DTA_SPECIAL_HPP

#include <span>
#include <vector>

namespace dta {

// log Gamma(x) - Stirling leading terms; accurate correction term used by
// log_beta_fn to avoid the cancellation that plain lgamma differences hit
// for large arguments.
double stirling_correction(double x);

// log B(a, b) for a, b > 0.
double log_beta_fn(double a, double b);

// log Sigma exp(v_i) with max subtraction; -inf entries allowed.
double log_sum_exp(std::span<const double> values);
double log_sum_exp(const std::vector<double>& values);
double log_sum_exp(double a, double b);

// log C(n, k) for integers 0 <= k <= n.
double log_binomial_coef(long n, long k);

// log of the generalized binomial coefficient C(c + t - 1, t), c > 0 real.
double log_gen_binomial_coef(double c, long t);

// log N(x; mean, var) density.
double log_normal_pdf(double x, double mean, double var);

}  // namespace dta

#endif

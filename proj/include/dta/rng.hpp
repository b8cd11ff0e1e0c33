#ifndef DTA_RNG_HPP
#define DTA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace dta {

// Seeded random stream. All draw routines are implemented on top of the
// raw 64-bit engine output so that a given seed reproduces the same
// sequence run after run; sub-streams for parallel chains are derived
// from (seed, index) with a splitmix hash.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed) {
    std::uint64_t s = seed;
    std::seed_seq seq{splitmix(s), splitmix(s), splitmix(s), splitmix(s)};
    engine_.seed(seq);
  }

  static RngStream derived(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    std::uint64_t mixed = splitmix(s) ^ (index * 0x9e3779b97f4a7c15ULL);
    return RngStream(splitmix(mixed) ^ mixed);
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]; safe as a log argument.
  double uniform_pos() { return 1.0 - uniform(); }

  double normal() {
    double u = uniform_pos();
    double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
  }

  // Marsaglia-Tsang; density x^{a-1} e^{-x/s} / (Gamma(a) s^a).
  double gamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
      throw std::invalid_argument("gamma: shape and scale must be positive");
    if (shape < 1.0) {
      double x = gamma(shape + 1.0, scale);
      return x * std::pow(uniform_pos(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double t = 1.0 + c * x;
      if (t <= 0.0) continue;
      double v = t * t * t;
      double u = uniform_pos();
      if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v))
        return d * v * scale;
    }
  }

  double chi_squared(double df) { return gamma(0.5 * df, 2.0); }

  // Density proportional to x^{-(shape+1)} exp(-scale/x).
  double inverse_gamma(double shape, double scale) {
    return scale / gamma(shape, 1.0);
  }

  double beta(double a, double b) {
    double x = gamma(a, 1.0);
    double y = gamma(b, 1.0);
    return x / (x + y);
  }

  // Sum of Bernoulli draws; trial counts in this project are small.
  int binomial(int n, double p) {
    if (n < 0) throw std::invalid_argument("binomial: n < 0");
    if (p <= 0.0) return 0;
    if (p >= 1.0) return n;
    int count = 0;
    for (int i = 0; i < n; ++i)
      if (uniform() < p) ++count;
    return count;
  }

 private:
  static std::uint64_t splitmix(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace dta

#endif

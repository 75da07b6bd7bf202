#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace qfb {

// Deterministic random source. Raw mt19937_64 output is converted to doubles
// by hand so that streams are bit-identical across standard library
// implementations (std::uniform_real_distribution is not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Log-uniform over [lo, hi], lo > 0.
  double log_uniform(double lo, double hi) {
    return lo * std::exp(uniform() * std::log(hi / lo));
  }

  std::complex<double> complex_in_box(double half_width) {
    double re = uniform(-half_width, half_width);
    double im = uniform(-half_width, half_width);
    return {re, im};
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(uniform() * (hi - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qfb

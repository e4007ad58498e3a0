#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "hadamard/scalar.hpp"

namespace hadamard {

// Seeded random source with hand-rolled distributions so that a given seed
// reproduces the same stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform integer in [lo, hi], inclusive
  long uniform_long(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t v;
    do { v = engine_(); } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  // uniform in [0, 1)
  double uniform_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // standard normal via Box-Muller
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1, u2;
    do { u1 = uniform_double(); } while (u1 <= 0.0);
    u2 = uniform_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

  // uniform rational with |numerator| <= num_bound, 1 <= denominator <= den_bound
  Rational rational(long num_bound, long den_bound) {
    return make_rational(uniform_long(-num_bound, num_bound), uniform_long(1, den_bound));
  }

  GaussianRational gaussian_rational(long num_bound, long den_bound) {
    Rational re = rational(num_bound, den_bound);
    Rational im = rational(num_bound, den_bound);
    return {re, im};
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace hadamard

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "tfkit/group.hpp"

namespace tfkit {

// Seedable generator with a platform-independent stream: std::mt19937_64
// is fully specified by the standard, and the conversions to real numbers
// below are written out instead of going through <random> distributions,
// whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (no cached second value).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Complex normal with independent N(0,1) parts.
  cplx complex_normal() {
    const double re = normal();
    return {re, normal()};
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tfkit

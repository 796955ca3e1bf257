#pragma once

#include <cstdint>
#include <random>

namespace resurgence {

/// Deterministic RNG wrapper. mt19937_64 has a standard-mandated
/// algorithm; the uniform helpers below avoid std::*_distribution, whose
/// output is implementation-defined, so streams are reproducible across
/// standard libraries for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Uniform in [a, b).
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace resurgence

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "fbh/types.hpp"

namespace fbh {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Counter-based stream derivation: the stream for (seed, salt, index) does
/// not depend on which other streams were drawn or in which order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt,
                                 std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ salt) + index);
}

/// mt19937_64 with library-independent conversions to doubles, so draws are
/// identical on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  Complex complex_normal(double scale = 1.0) {
    return {scale * normal(), scale * normal()};
  }

  /// Uniform on the disk of the given radius.
  Complex in_disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, 2.0 * std::numbers::pi * uniform());
  }

  Complex unimodular() {
    return std::polar(1.0, 2.0 * std::numbers::pi * uniform());
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fbh

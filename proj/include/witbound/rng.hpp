#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "witbound/types.hpp"

namespace witbound {

/// Counter-based generator (splitmix64). One 64-bit seed plus a stream index
/// select a window on the underlying Weyl sequence; streams are spaced 2^32
/// draws apart, so any collection of streams drawing fewer than 2^32 values
/// each never overlaps. Output for a given (seed, stream, draw index) is
/// platform-independent, which is what makes parallel partitioning of work
/// items reproducible.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  SplitMix64(std::uint64_t seed, std::uint64_t stream)
      : state_(seed + kGamma * (stream << 32)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~static_cast<result_type>(0); }

  result_type operator()() {
    state_ += kGamma;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (pair cached).
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
  }

  Complex gaussian_complex() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Haar-random unit vector in C^d (normalized complex Gaussian).
inline ComplexVector haar_vector(int d, SplitMix64& rng) {
  ComplexVector v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.gaussian_complex();
  v /= v.norm();
  return v;
}

}  // namespace witbound

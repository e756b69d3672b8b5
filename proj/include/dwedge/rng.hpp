#pragma once

#include <cstdint>

#include "dwedge/algebra.hpp"

namespace dwedge {

/// SplitMix64. Pinned here (rather than <random>) so seeded runs reproduce
/// byte-identically across platforms and standard libraries.
/// Constants: gamma 0x9E3779B97F4A7C15, mixers 0xBF58476D1CE4E5B9 and
/// 0x94D049BB133111EB, shifts 30/27/31.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double next_in(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
  }

  Vector next_vector(int dim, double lo = -1.0, double hi = 1.0) {
    Vector v = Vector::zero(dim);
    for (int i = 0; i < dim; ++i) v[i] = next_in(lo, hi);
    return v;
  }

  LinearMap next_matrix(int dim, double lo = -1.0, double hi = 1.0) {
    LinearMap m(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m(i, j) = next_in(lo, hi);
    return m;
  }

 private:
  std::uint64_t state_;
};

}  // namespace dwedge

#pragma once

#include <cmath>
#include <cstdint>

#include "finsler/vecmat.hpp"

namespace finsler {

/// SplitMix64 generator.  Hand-rolled so sampled scenarios are reproducible
/// bit-for-bit across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  /// Uniform direction on the Euclidean unit sphere.
  Vec<double> unit_vector(int dim) {
    while (true) {
      Vec<double> v(dim);
      for (int i = 0; i < dim; ++i) v[i] = normal();
      double s = norm(v);
      if (s > 1e-6) return (1.0 / s) * v;
    }
  }

  /// Uniform point in the Euclidean ball of given radius.
  Vec<double> in_ball(int dim, double radius) {
    Vec<double> v = unit_vector(dim);
    double u = std::pow(uniform(), 1.0 / dim);
    return (radius * u) * v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace finsler

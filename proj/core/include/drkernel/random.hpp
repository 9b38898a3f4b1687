#pragma once

#include <cstdint>
#include <random>

#include "drkernel/types.hpp"

namespace drkernel {

/// Seeded source of uniform draws.
///
/// Doubles are (u >> 11) * 2^-53 of the raw mt19937_64 output u.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit();
  double uniform(double lo, double hi);
  /// Components uniform in [-scale, scale].
  Vector box(int n, double scale);
  /// Uniformly random direction with norm uniform in [0, max_norm].
  Vector ball(int n, double max_norm);

 private:
  std::mt19937_64 engine_;
};

}  // namespace drkernel

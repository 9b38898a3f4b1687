#pragma once

#include <vector>

#include "drkernel/busemann.hpp"
#include "drkernel/random.hpp"

namespace drkernel::testing {

inline const std::vector<AlgebraDescriptor>& builtin_algebras() {
  static const std::vector<AlgebraDescriptor> all = {{1, 1}, {1, 2}, {2, 1}, {3, 1}, {7, 1}};
  return all;
}

inline GroupPoint random_point(Sampler& rng, const Algebra& alg, double scale = 2.0) {
  GroupPoint x;
  x.V = rng.box(alg.k(), scale);
  x.Y = rng.box(alg.m(), scale);
  x.a = rng.uniform(0.2, 5.0);
  return x;
}

inline BoundaryPoint random_theta(Sampler& rng, const Algebra& alg, double scale = 2.0) {
  Vector v = rng.box(alg.k(), scale);
  Vector y = rng.box(alg.m(), scale);
  return BoundaryPoint::finite(std::move(v), std::move(y));
}

/// theta with calV = 0 at x: v = V, y random.
inline BoundaryPoint theta_v0(Sampler& rng, const Algebra& alg, const GroupPoint& x, double scale = 2.0) {
  return BoundaryPoint::finite(x.V, rng.box(alg.m(), scale));
}

/// theta with calY = 0 at x: v random, y = Y + [V, v]/2.
inline BoundaryPoint theta_y0(Sampler& rng, const Algebra& alg, const GroupPoint& x, double scale = 2.0) {
  Vector v = rng.box(alg.k(), scale);
  Vector y = x.Y + 0.5 * alg.bracket(x.V, v);
  return BoundaryPoint::finite(std::move(v), std::move(y));
}

inline Vector to_vector(const std::vector<double>& xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
  return v;
}

}  // namespace drkernel::testing

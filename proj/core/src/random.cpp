#include "drkernel/random.hpp"

namespace drkernel {

double Sampler::unit() {
  // 53 high bits -> [0, 1)
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Sampler::uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

Vector Sampler::box(int n, double scale) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(-scale, scale);
  return v;
}

Vector Sampler::ball(int n, double max_norm) {
  Vector v = box(n, 1.0);
  double norm = v.norm();
  while (norm < 1e-3) {
    v = box(n, 1.0);
    norm = v.norm();
  }
  return v * (uniform(0.0, max_norm) / norm);
}

}  // namespace drkernel

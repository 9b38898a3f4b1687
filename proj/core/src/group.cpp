#include "drkernel/group.hpp"

#include <algorithm>
#include <cmath>

#include "drkernel/linalg.hpp"
#include "drkernel/random.hpp"

namespace drkernel {

void validate(const Algebra& alg, const GroupPoint& x) {
  alg.check_v(x.V, "V");
  alg.check_z(x.Y, "Y");
  if (!x.V.allFinite() || !x.Y.allFinite() || !std::isfinite(x.a)) throw Error("group point has non-finite components");
  if (!(x.a > 0.0)) throw Error("group point needs a > 0");
}

GroupPoint identity_point(const Algebra& alg) { return {Vector::Zero(alg.k()), Vector::Zero(alg.m()), 1.0}; }

GroupPoint multiply(const Algebra& alg, const GroupPoint& x, const GroupPoint& y) {
  validate(alg, x);
  validate(alg, y);
  const double root_a = std::sqrt(x.a);
  return {x.V + root_a * y.V, x.Y + x.a * y.Y + 0.5 * root_a * alg.bracket(x.V, y.V), x.a * y.a};
}

GroupPoint inverse(const Algebra& alg, const GroupPoint& x) {
  validate(alg, x);
  return {-x.V / std::sqrt(x.a), -x.Y / x.a, 1.0 / x.a};
}

AlgebraElement lie_bracket_s(const Algebra& alg, const AlgebraElement& xi, const AlgebraElement& eta) {
  return {0.5 * xi.t * eta.v - 0.5 * eta.t * xi.v, xi.t * eta.y - eta.t * xi.y + alg.bracket(xi.v, eta.v), 0.0};
}

AlgebraElement basis_element(const Algebra& alg, int alpha) {
  const int k = alg.k();
  if (alpha < 0 || alpha >= alg.dim()) throw Error("frame index out of range");
  AlgebraElement e{Vector::Zero(k), Vector::Zero(alg.m()), 0.0};
  if (alpha == 0) {
    e.t = 1.0;
  } else if (alpha <= k) {
    e.v(alpha - 1) = 1.0;
  } else {
    e.y(alpha - 1 - k) = 1.0;
  }
  return e;
}

FrameVector to_frame(const AlgebraElement& xi) {
  FrameVector out(1 + xi.v.size() + xi.y.size());
  out << xi.t, xi.v, xi.y;
  return out;
}

Matrix frame_at(const Algebra& alg, const GroupPoint& x) {
  validate(alg, x);
  return frame_coefficients<double>(alg, x.V, x.a);
}

FrameVector connection_coeffs(const Algebra& alg, int alpha, int beta) {
  const int k = alg.k();
  const int m = alg.m();
  const int n = alg.dim();
  if (alpha < 0 || alpha >= n || beta < 0 || beta >= n) throw Error("frame index out of range");
  FrameVector c = FrameVector::Zero(n);
  auto in_v = [k](int idx) { return idx >= 1 && idx <= k; };
  if (alpha == 0) return c;

  if (in_v(alpha)) {
    const int i = alpha - 1;
    if (in_v(beta)) {
      const int j = beta - 1;
      for (int r = 0; r < m; ++r) c(1 + k + r) = 0.5 * alg.structure_constant(i, j, r);
      if (i == j) c(0) = 0.5;
    } else if (beta > k) {
      const int r = beta - 1 - k;
      for (int j = 0; j < k; ++j) c(1 + j) = -0.5 * alg.structure_constant(i, j, r);
    } else {
      c(alpha) = -0.5;
    }
    return c;
  }

  const int r = alpha - 1 - k;
  if (in_v(beta)) {
    const int i = beta - 1;
    for (int j = 0; j < k; ++j) c(1 + j) = -0.5 * alg.structure_constant(i, j, r);
  } else if (beta > k) {
    if (beta == alpha) c(0) = 1.0;
  } else {
    c(alpha) = -1.0;
  }
  return c;
}

double GroupAxiomReport::worst() const {
  return std::max({identity, associativity, inverse, metric_compatibility, torsion});
}

namespace {

double point_distance(const GroupPoint& p, const GroupPoint& q) {
  return std::max({(p.V - q.V).cwiseAbs().maxCoeff(), (p.Y - q.Y).cwiseAbs().maxCoeff(), std::abs(p.a - q.a)});
}

}  // namespace

GroupAxiomReport check_group_axioms(const Algebra& alg, int trials, std::uint64_t seed, double scale) {
  if (trials < 1) throw Error("trials must be at least 1");
  Sampler rng(seed);
  GroupAxiomReport rep;
  rep.trials = trials;
  const GroupPoint e = identity_point(alg);
  auto draw = [&] {
    GroupPoint p;
    p.V = rng.box(alg.k(), scale);
    p.Y = rng.box(alg.m(), scale);
    p.a = rng.uniform(0.2, 5.0);
    return p;
  };
  for (int t = 0; t < trials; ++t) {
    const GroupPoint x = draw(), y = draw(), z = draw();
    rep.identity = std::max({rep.identity, point_distance(multiply(alg, e, x), x),
                             point_distance(multiply(alg, x, e), x)});
    rep.associativity = std::max(rep.associativity, point_distance(multiply(alg, multiply(alg, x, y), z),
                                                                   multiply(alg, x, multiply(alg, y, z))));
    rep.inverse = std::max({rep.inverse, point_distance(multiply(alg, x, inverse(alg, x)), e),
                            point_distance(multiply(alg, inverse(alg, x), x), e)});
  }

  // The frame is orthonormal, so <X, Y> is the dot product of coefficients.
  const int n = alg.dim();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const FrameVector nab = connection_coeffs(alg, a, b);
      for (int c = 0; c < n; ++c) {
        const FrameVector nac = connection_coeffs(alg, a, c);
        rep.metric_compatibility = std::max(rep.metric_compatibility, std::abs(nab(c) + nac(b)));
      }
      const FrameVector torsion = nab - connection_coeffs(alg, b, a) -
                                  to_frame(lie_bracket_s(alg, basis_element(alg, a), basis_element(alg, b)));
      rep.torsion = std::max(rep.torsion, torsion.cwiseAbs().maxCoeff());
    }
  }
  return rep;
}

}  // namespace drkernel

#pragma once

#include <cmath>
#include <cstdint>

#include "drkernel/algebra.hpp"

namespace drkernel {

/// A point (V, Y, a) of S = v x z x R_+.
struct GroupPoint {
  Vector V;
  Vector Y;
  double a = 1.0;
};

/// V + Y + t A in s = n (+) RA.
struct AlgebraElement {
  Vector v;
  Vector y;
  double t = 0.0;
};

/// Throws unless V, Y have the algebra's dimensions, components are finite
/// and a > 0.
void validate(const Algebra& alg, const GroupPoint& x);

GroupPoint identity_point(const Algebra& alg);

/// (V, Y, a)(V', Y', a') = (V + sqrt(a) V', Y + a Y' + sqrt(a)/2 [V, V'], a a').
GroupPoint multiply(const Algebra& alg, const GroupPoint& x, const GroupPoint& y);
/// (-V/sqrt(a), -Y/a, 1/a).
GroupPoint inverse(const Algebra& alg, const GroupPoint& x);

/// [V+Y+tA, V'+Y'+t'A] = t/2 V' - t'/2 V + t Y' - t' Y + [V, V']_n.
AlgebraElement lie_bracket_s(const Algebra& alg, const AlgebraElement& xi, const AlgebraElement& eta);

/// Generator of s matching frame index alpha (0 -> A, 1..k -> e_i, k+1.. -> e_{k+r}).
AlgebraElement basis_element(const Algebra& alg, int alpha);
/// Frame coefficients (t, v, y) of an algebra element.
FrameVector to_frame(const AlgebraElement& xi);

/// Coefficients of the left-invariant orthonormal frame in coordinates
/// (V^1..V^k, Y^1..Y^m, a); column alpha holds E_alpha:
///
///   E_0     = a d/da
///   E_i     = sqrt(a) d/dV^i - sqrt(a)/2 sum_{j,r} A_ij^r V^j d/dY^r
///   E_{k+r} = a d/dY^r
///
/// Templated on the scalar so extended-precision callers can share it.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> frame_coefficients(
    const Algebra& alg, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& V, Scalar a) {
  using std::sqrt;
  const int k = alg.k();
  const int m = alg.m();
  const int n = alg.dim();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> E =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  const Scalar root_a = sqrt(a);
  E(n - 1, 0) = a;
  for (int i = 0; i < k; ++i) {
    E(i, 1 + i) = root_a;
    for (int r = 0; r < m; ++r) {
      Scalar s(0);
      for (int j = 0; j < k; ++j) s += Scalar(alg.structure_constant(i, j, r)) * V(j);
      E(k + r, 1 + i) = -root_a / Scalar(2) * s;
    }
  }
  for (int r = 0; r < m; ++r) E(k + r, 1 + k + r) = a;
  return E;
}

Matrix frame_at(const Algebra& alg, const GroupPoint& x);

/// nabla_{E_alpha} E_beta expanded in the frame (constant coefficients):
///
///   nabla_{E_i} E_j         = 1/2 sum_r A_ij^r E_{k+r} + 1/2 delta_ij E_0
///   nabla_{E_i} E_{k+r}     = nabla_{E_{k+r}} E_i = -1/2 sum_j A_ij^r E_j
///   nabla_{E_i} E_0         = -1/2 E_i
///   nabla_{E_{k+r}} E_{k+l} = delta_rl E_0
///   nabla_{E_{k+r}} E_0     = -E_{k+r}
///   nabla_{E_0} E_alpha     = 0
FrameVector connection_coeffs(const Algebra& alg, int alpha, int beta);

/// Residuals of the group axioms on random samples plus exhaustive
/// metric-compatibility and torsion checks of the connection table.
struct GroupAxiomReport {
  double identity = 0.0;
  double associativity = 0.0;
  double inverse = 0.0;
  double metric_compatibility = 0.0;
  double torsion = 0.0;
  int trials = 0;

  double worst() const;
};

/// Samples V, Y in [-scale, scale], a in [0.2, 5].
GroupAxiomReport check_group_axioms(const Algebra& alg, int trials, std::uint64_t seed,
                                    double scale = 2.0);

}  // namespace drkernel

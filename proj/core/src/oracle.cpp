#include "drkernel/oracle.hpp"

#include <cmath>

#include "drkernel/linalg.hpp"

namespace drkernel::oracle {

void FDConfig::validate() const {
  if (!(h > 0.0)) throw Error("finite-difference step h must be positive");
  if (!(tol_grad > 0.0) || !(tol_hess > 0.0)) throw Error("finite-difference tolerances must be positive");
}

RMatrix chart_frame(const Algebra& alg, const GroupPoint& base, const RVector& displacement) {
  const int k = alg.k();
  const int n = alg.dim();
  const RVector V = base.V.cast<Real>() + displacement.head(k);
  const Real a = static_cast<Real>(base.a) * std::exp(displacement(n - 1));
  RMatrix e = frame_coefficients<Real>(alg, V, a);
  // a d/da = d/ds
  e.row(n - 1) /= a;
  return e;
}

Real directional_derivative(const ScalarField& phi, const Algebra& alg, const GroupPoint& base,
                            const RVector& displacement, int alpha, double h) {
  const RVector step = static_cast<Real>(h) * chart_frame(alg, base, displacement).col(alpha);
  return (phi(displacement + step) - phi(displacement - step)) / (2 * static_cast<Real>(h));
}

Real directional_derivative(const ScalarField& phi, const Algebra& alg, const GroupPoint& base, int alpha,
                            double h) {
  return directional_derivative(phi, alg, base, RVector::Zero(alg.dim()), alpha, h);
}

ScalarField busemann_increment(const Algebra& alg, const GroupPoint& base, const BoundaryPoint& theta) {
  validate(alg, base);
  const int k = alg.k();
  const int m = alg.m();
  const int n = alg.dim();
  if (theta.is_infinity()) {
    // b = -log a = -s
    return [n](const RVector& d) { return -d(n - 1); };
  }

  // Base quantities, recomputed here in extended precision.
  const RVector v = theta.v().cast<Real>();
  const RVector V0 = base.V.cast<Real>();
  const RVector Y0 = base.Y.cast<Real>();
  const Real a0 = base.a;
  // [U, v]_r = <J_r U, v> = <U, J_r^T v>
  RMatrix bracket_with_v(m, k);
  for (int r = 0; r < m; ++r) bracket_with_v.row(r) = (alg.J(r).transpose().cast<Real>() * v).transpose();
  const RVector calV0 = v - V0;
  const RVector calY0 = theta.y().cast<Real>() - Y0 - bracket_with_v * V0 / 2;
  const Real f0 = a0 + calV0.squaredNorm() / 4;
  const Real F0 = f0 * f0 + calY0.squaredNorm();

  return [=](const RVector& d) {
    const auto dV = d.head(k);
    const auto dY = d.segment(k, m);
    const Real ds = d(n - 1);
    // calV = calV0 - dV, calY = calY0 - dY - [dV, v]/2, a = a0 e^ds
    const Real da = a0 * std::expm1(ds);
    const Real df = da - calV0.dot(dV) / 2 + dV.squaredNorm() / 4;
    const RVector dcalY = -dY - bracket_with_v * dV / 2;
    const Real dF = df * (2 * f0 + df) + 2 * calY0.dot(dcalY) + dcalY.squaredNorm();
    return std::log1p(dF / F0) - ds;
  };
}

FrameVector numeric_gradient(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta,
                             const FDConfig& cfg) {
  cfg.validate();
  const ScalarField phi = busemann_increment(alg, x, theta);
  FrameVector g(alg.dim());
  for (int alpha = 0; alpha < alg.dim(); ++alpha) {
    g(alpha) = static_cast<double>(directional_derivative(phi, alg, x, alpha, cfg.h));
  }
  return g;
}

NumericHessian numeric_hessian(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta,
                               const FDConfig& cfg) {
  cfg.validate();
  const int n = alg.dim();
  const Real h = cfg.h;
  const ScalarField phi = busemann_increment(alg, x, theta);
  const RVector origin = RVector::Zero(n);
  const RMatrix frame = chart_frame(alg, x, origin);

  RVector grad(n);
  for (int gamma = 0; gamma < n; ++gamma) grad(gamma) = directional_derivative(phi, alg, x, origin, gamma, cfg.h);

  RMatrix raw(n, n);
  for (int alpha = 0; alpha < n; ++alpha) {
    const RVector plus = h * frame.col(alpha);
    const RVector minus = -plus;
    for (int beta = 0; beta < n; ++beta) {
      const Real second = (directional_derivative(phi, alg, x, plus, beta, cfg.h) -
                           directional_derivative(phi, alg, x, minus, beta, cfg.h)) /
                          (2 * h);
      const RVector conn = connection_coeffs(alg, alpha, beta).cast<Real>();
      raw(alpha, beta) = second - conn.dot(grad);
    }
  }

  const Matrix m = raw.cast<double>();
  NumericHessian out;
  out.asymmetry = asymmetry(m);
  out.hessian.entries = 0.5 * (m + m.transpose());
  out.hessian.point_case = classify(alg, x, theta).point_case;
  out.gradient = grad.cast<double>();
  return out;
}

Comparison compare(const HessianMatrix& closed, const HessianMatrix& numeric, const FDConfig& cfg) {
  if (closed.entries.rows() != numeric.entries.rows() || closed.entries.cols() != numeric.entries.cols()) {
    throw Error("compare: shape mismatch");
  }
  if (closed.basis != numeric.basis) throw Error("compare: matrices are in different bases");
  Comparison out;
  out.max_abs_diff = max_abs(closed.entries - numeric.entries);
  out.spectrum_diff = (spectrum(closed.entries) - spectrum(numeric.entries)).cwiseAbs().maxCoeff();
  out.passed = out.max_abs_diff < cfg.tol_hess;
  return out;
}

RichardsonReport richardson_gradient(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta,
                                     const FDConfig& cfg) {
  const FrameVector exact = gradient(alg, x, theta);
  FDConfig half = cfg;
  half.h = 0.5 * cfg.h;
  RichardsonReport rep;
  rep.error_h = (numeric_gradient(alg, x, theta, cfg) - exact).cwiseAbs().maxCoeff();
  rep.error_half = (numeric_gradient(alg, x, theta, half) - exact).cwiseAbs().maxCoeff();
  return rep;
}

RichardsonReport richardson_hessian(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta,
                                    const FDConfig& cfg) {
  const Matrix exact = hessian_closed_form(alg, x, theta).entries;
  FDConfig half = cfg;
  half.h = 0.5 * cfg.h;
  RichardsonReport rep;
  rep.error_h = max_abs(numeric_hessian(alg, x, theta, cfg).hessian.entries - exact);
  rep.error_half = max_abs(numeric_hessian(alg, x, theta, half).hessian.entries - exact);
  return rep;
}

}  // namespace drkernel::oracle

#pragma once

#include <functional>

#include "drkernel/hessian.hpp"

namespace drkernel::oracle {

/// Finite-difference verification of the closed forms.
///
/// Differentiation happens in the chart (V, Y, s) with a = e^s, where
/// E_0 = d/ds. Scalar fields are evaluated in long double, as increments
/// relative to a fixed base point.

using Real = long double;
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using RMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

struct FDConfig {
  double h = 1e-4;
  double tol_grad = 1e-6;
  double tol_hess = 1e-5;

  /// Throws unless h > 0 and both tolerances are positive.
  void validate() const;
};

/// phi(base + d) for a chart displacement d = (dV, dY, ds). Only differences
/// of phi are used, so fields may drop additive constants.
using ScalarField = std::function<Real(const RVector& displacement)>;

/// Frame coefficients at base + d, expressed in the (V, Y, s) chart.
RMatrix chart_frame(const Algebra& alg, const GroupPoint& base, const RVector& displacement);

/// (phi(d + h E_alpha) - phi(d - h E_alpha)) / 2h with E_alpha evaluated at
/// base + d.
Real directional_derivative(const ScalarField& phi, const Algebra& alg, const GroupPoint& base,
                            const RVector& displacement, int alpha, double h);
Real directional_derivative(const ScalarField& phi, const Algebra& alg, const GroupPoint& base, int alpha,
                            double h);

/// b(base + d) - b(base), computed from the defining formula in
/// difference form (log1p of the relative change of F, minus ds).
ScalarField busemann_increment(const Algebra& alg, const GroupPoint& base, const BoundaryPoint& theta);

/// Central-difference frame gradient of b.
FrameVector numeric_gradient(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta,
                             const FDConfig& cfg);

struct NumericHessian {
  HessianMatrix hessian;  ///< symmetrized (M + M^T) / 2
  FrameVector gradient;
  double asymmetry = 0.0; ///< max |M - M^T| before symmetrizing
};

/// Nested central differences for E_alpha(E_beta b), minus the connection
/// term sum_gamma Gamma^gamma_{alpha beta} E_gamma b.
NumericHessian numeric_hessian(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta,
                               const FDConfig& cfg);

struct Comparison {
  double max_abs_diff = 0.0;
  double spectrum_diff = 0.0;
  bool passed = false;
};

/// Throws Error on shape mismatch.
Comparison compare(const HessianMatrix& closed, const HessianMatrix& numeric, const FDConfig& cfg);

/// Errors of the numeric derivative against the closed form at h and h/2.
struct RichardsonReport {
  double error_h = 0.0;
  double error_half = 0.0;
  double ratio() const { return error_h / error_half; }
};

RichardsonReport richardson_gradient(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta,
                                     const FDConfig& cfg);
RichardsonReport richardson_hessian(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta,
                                    const FDConfig& cfg);

}  // namespace drkernel::oracle

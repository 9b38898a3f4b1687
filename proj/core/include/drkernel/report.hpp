#pragma once

#include <limits>
#include <optional>
#include <string>

#include "drkernel/oracle.hpp"

namespace drkernel {

/// Thresholds applied to one sampled point.
struct CheckTolerances {
  double symmetry = 1e-10;
  double kernel = 1e-7;          ///< |H grad b|
  double unit_gradient = 1e-8;
  double degenerate_spectrum = 1e-8;
  double continuity_warning = 1e-6;  ///< special vs general formula near the threshold
  double eq20 = 1e-10;
  double eq21 = 1e-12;
  double b1 = 1e-8;              ///< B1 spectrum; dets use 1e-9, trace 1e-10
  double det_relative = 1e-8;
  double mu_slack = 1e-10;
  oracle::FDConfig fd;
};

struct BlockSummary {
  double eq20 = 0.0;
  double eq21 = 0.0;
  double trB1 = 0.0;
  double detB_closed = 0.0;
  double detB_numeric = 0.0;
};

/// Everything verified at one (x, theta).
struct HessianReport {
  int id = 0;
  GroupPoint point;
  BoundaryPoint theta = BoundaryPoint::infinity();
  PointCase point_case = PointCase::General;
  Vector spectrum;
  double min_on_complement = 0.0;
  double kernel_residual = 0.0;
  double gradient_norm = 0.0;
  double symmetry_residual = 0.0;
  double max_oracle_diff = 0.0;
  double oracle_asymmetry = 0.0;
  double spectrum_residual = 0.0;  ///< degenerate cases only; 0 otherwise
  /// Gap between the special-case and general formulas; NaN unless both were
  /// evaluated (degenerate points and general points near the threshold).
  double continuity_gap = std::numeric_limits<double>::quiet_NaN();
  std::string warning;  ///< non-fatal diagnostics
  std::optional<BlockSummary> blocks;  ///< general case only
  std::string failure;  ///< first failed check, empty on success
  bool pass = false;
};

/// Runs the closed form, the oracle and every spectral/block check at one
/// point. Never throws for valid inputs; an unexpected Error is recorded as
/// a failure.
HessianReport evaluate_point(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta,
                             const CheckTolerances& tol, int id = 0);

}  // namespace drkernel

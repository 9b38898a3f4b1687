#pragma once

#include <string_view>

#include "drkernel/group.hpp"

namespace drkernel {

/// A point of the ideal boundary, identified with n u {infinity}.
class BoundaryPoint {
 public:
  static BoundaryPoint finite(Vector v, Vector y);
  static BoundaryPoint infinity() { return BoundaryPoint{}; }

  bool is_infinity() const { return infinity_; }
  /// Throw for the point at infinity.
  const Vector& v() const;
  const Vector& y() const;

 private:
  BoundaryPoint() = default;
  bool infinity_ = true;
  Vector v_;
  Vector y_;
};

/// Auxiliary quantities at (x, theta) for finite theta:
///   calV = v - V,  calY = y - Y - 1/2 [V, v],
///   f = a + |calV|^2 / 4,  F = f^2 + |calY|^2.
struct BusemannState {
  Vector calV;
  Vector calY;
  double f = 0.0;
  double F = 0.0;
};

/// Throws Error("state undefined at infinity") for theta = infinity.
BusemannState vy_state(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta);

/// Closed-form Busemann function:
///   log( F / (a ((1 + |v|^2/4)^2 + |y|^2)) )   for theta = (v, y),
///   -log a                                     for theta = infinity.
double busemann_value(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta);

/// log F - log a: the same function without the theta-only constant.
double busemann_value_logform(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta);

/// C(theta) = -log((1 + |v|^2/4)^2 + |y|^2), so that
/// busemann_value = busemann_value_logform + C(theta).
double busemann_normalization(const BoundaryPoint& theta);

struct FrameDerivatives {
  FrameVector df;  ///< (E_alpha f)
  FrameVector dF;  ///< (E_alpha F)
};

/// E_0 f = a, E_i f = -sqrt(a)/2 <calV, e_i>, E_{k+r} f = 0,
/// E_0 F = 2af, E_i F = -sqrt(a) <f calV - J_calY calV, e_i>, E_{k+r} F = -2a <calY, e_{k+r}>.
/// f and F exist only for finite theta; throws at infinity.
FrameDerivatives frame_derivatives(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta);

/// Frame components of grad b: E_alpha b = E_alpha F / F - delta_{alpha 0},
/// and (-1, 0, ..., 0) at infinity. Always a unit vector.
FrameVector gradient(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta);

/// Which Hessian formula applies at (x, theta).
enum class PointCase {
  Infinity,  ///< theta = infinity
  VY0,       ///< calV = 0 and calY = 0
  V0,        ///< calV = 0, calY != 0
  Y0,        ///< calV != 0, calY = 0
  General,   ///< both nonzero
};

std::string_view to_string(PointCase c);
bool is_degenerate(PointCase c);

/// Relative scale below which calV (resp. calY) counts as zero:
/// |calV| < 1e-9 (1 + |v| + |V|), |calY| < 1e-9 (1 + |y| + |Y|).
inline constexpr double kDegeneracyThreshold = 1e-9;

struct Classification {
  PointCase point_case = PointCase::General;
  double calV_norm = 0.0;
  double calY_norm = 0.0;
  double calV_threshold = 0.0;
  double calY_threshold = 0.0;
};

Classification classify(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta);

}  // namespace drkernel

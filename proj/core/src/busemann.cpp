#include "drkernel/busemann.hpp"

#include <cmath>

namespace drkernel {

BoundaryPoint BoundaryPoint::finite(Vector v, Vector y) {
  if (!v.allFinite() || !y.allFinite()) throw Error("boundary point has non-finite components");
  BoundaryPoint p;
  p.infinity_ = false;
  p.v_ = std::move(v);
  p.y_ = std::move(y);
  return p;
}

const Vector& BoundaryPoint::v() const {
  if (infinity_) throw Error("boundary point at infinity has no v component");
  return v_;
}

const Vector& BoundaryPoint::y() const {
  if (infinity_) throw Error("boundary point at infinity has no y component");
  return y_;
}

BusemannState vy_state(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta) {
  if (theta.is_infinity()) throw Error("state undefined at infinity");
  validate(alg, x);
  alg.check_v(theta.v(), "v");
  alg.check_z(theta.y(), "y");
  BusemannState s;
  s.calV = theta.v() - x.V;
  s.calY = theta.y() - x.Y - 0.5 * alg.bracket(x.V, theta.v());
  s.f = x.a + 0.25 * s.calV.squaredNorm();
  s.F = s.f * s.f + s.calY.squaredNorm();
  return s;
}

double busemann_normalization(const BoundaryPoint& theta) {
  if (theta.is_infinity()) return 0.0;
  const double q = 1.0 + 0.25 * theta.v().squaredNorm();
  return -std::log(q * q + theta.y().squaredNorm());
}

double busemann_value(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta) {
  validate(alg, x);
  if (theta.is_infinity()) return -std::log(x.a);
  const BusemannState s = vy_state(alg, x, theta);
  const double q = 1.0 + 0.25 * theta.v().squaredNorm();
  return std::log(s.F / (x.a * (q * q + theta.y().squaredNorm())));
}

double busemann_value_logform(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta) {
  validate(alg, x);
  if (theta.is_infinity()) return -std::log(x.a);
  return std::log(vy_state(alg, x, theta).F) - std::log(x.a);
}

FrameDerivatives frame_derivatives(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta) {
  if (theta.is_infinity()) throw Error("f and F are undefined at infinity; use gradient()");
  const BusemannState s = vy_state(alg, x, theta);
  const int k = alg.k();
  const int m = alg.m();
  const double root_a = std::sqrt(x.a);
  const Vector w = s.f * s.calV - alg.j_map(s.calY, s.calV);

  FrameDerivatives d{FrameVector::Zero(alg.dim()), FrameVector::Zero(alg.dim())};
  d.df(0) = x.a;
  d.df.segment(1, k) = -0.5 * root_a * s.calV;
  d.dF(0) = 2.0 * x.a * s.f;
  d.dF.segment(1, k) = -root_a * w;
  d.dF.segment(1 + k, m) = -2.0 * x.a * s.calY;
  return d;
}

FrameVector gradient(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta) {
  if (theta.is_infinity()) {
    validate(alg, x);
    FrameVector g = FrameVector::Zero(alg.dim());
    g(0) = -1.0;
    return g;
  }
  const BusemannState s = vy_state(alg, x, theta);
  FrameVector g = frame_derivatives(alg, x, theta).dF / s.F;
  g(0) -= 1.0;
  return g;
}

std::string_view to_string(PointCase c) {
  switch (c) {
    case PointCase::Infinity: return "inf";
    case PointCase::VY0: return "VY0";
    case PointCase::V0: return "V0";
    case PointCase::Y0: return "Y0";
    case PointCase::General: return "general";
  }
  return "general";
}

bool is_degenerate(PointCase c) { return c != PointCase::General; }

Classification classify(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta) {
  Classification out;
  if (theta.is_infinity()) {
    validate(alg, x);
    out.point_case = PointCase::Infinity;
    return out;
  }
  const BusemannState s = vy_state(alg, x, theta);
  out.calV_norm = s.calV.norm();
  out.calY_norm = s.calY.norm();
  out.calV_threshold = kDegeneracyThreshold * (1.0 + theta.v().norm() + x.V.norm());
  out.calY_threshold = kDegeneracyThreshold * (1.0 + theta.y().norm() + x.Y.norm());
  const bool v_zero = out.calV_norm < out.calV_threshold;
  const bool y_zero = out.calY_norm < out.calY_threshold;
  if (v_zero && y_zero) {
    out.point_case = PointCase::VY0;
  } else if (v_zero) {
    out.point_case = PointCase::V0;
  } else if (y_zero) {
    out.point_case = PointCase::Y0;
  } else {
    out.point_case = PointCase::General;
  }
  return out;
}

}  // namespace drkernel

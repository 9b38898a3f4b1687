#include "drkernel/hessian.hpp"

#include <algorithm>
#include <cmath>

#include "drkernel/linalg.hpp"

namespace drkernel {
namespace {

// Points classified General but with |calV| or |calY| within this factor of
// the threshold also get the special-case formula evaluated for comparison.
constexpr double kContinuityAnnulus = 1e3;
constexpr double kLayoutTol = 1e-9;

// (B)(r, i) = <[e_i, U], e_{k+r}> = <J_r e_i, U>
Matrix bracket_rows(const Algebra& alg, const Vector& U) {
  Matrix out(alg.m(), alg.k());
  for (int r = 0; r < alg.m(); ++r) out.row(r) = (alg.J(r).transpose() * U).transpose();
  return out;
}

Matrix infinity_hessian(const Algebra& alg) {
  Matrix h = Matrix::Zero(alg.dim(), alg.dim());
  for (int i = 1; i <= alg.k(); ++i) h(i, i) = 0.5;
  for (int r = 1; r <= alg.m(); ++r) h(alg.k() + r, alg.k() + r) = 1.0;
  return h;
}

Matrix special_formula(const Algebra& alg, const GroupPoint& x, const BusemannState& s, PointCase which) {
  const int k = alg.k();
  const int m = alg.m();
  const double a = x.a;
  const double root_a = std::sqrt(a);
  Matrix h = infinity_hessian(alg);
  switch (which) {
    case PointCase::VY0:
    case PointCase::Infinity:
      return h;
    case PointCase::V0: {
      // f = a exactly
      const Vector& Y = s.calY;
      const double F = a * a + Y.squaredNorm();
      const double F2 = F * F;
      h(0, 0) = 4.0 * a * a * (F - a * a) / F2;
      h.block(1 + k, 1 + k, m, m) = Matrix::Identity(m, m) - (4.0 * a * a / F2) * Y * Y.transpose();
      const Vector row = (2.0 * a * (2.0 * a * a - F) / F2) * Y;
      h.block(0, 1 + k, 1, m) = row.transpose();
      h.block(1 + k, 0, m, 1) = row;
      return h;
    }
    case PointCase::Y0: {
      // F = f^2 exactly
      const Vector& V = s.calV;
      const double f = a + 0.25 * V.squaredNorm();
      const double f2 = f * f;
      const double F = f2;
      const Matrix bv = bracket_rows(alg, V);
      h(0, 0) = 2.0 * a * (f - a) / f2;
      h.block(1, 1, k, k) = (a / (2.0 * f2)) * (-V * V.transpose() + bv.transpose() * bv) +
                            0.5 * Matrix::Identity(k, k);
      const Vector row = (-root_a * (f - 2.0 * a) / (2.0 * f2)) * V;
      h.block(0, 1, 1, k) = row.transpose();
      h.block(1, 0, k, 1) = row;
      for (int r = 0; r < m; ++r) {
        const Vector col = (root_a * (f - 2.0 * a) / (2.0 * f2)) * (alg.J(r) * V);
        h.block(1, 1 + k + r, k, 1) = col;
        h.block(1 + k + r, 1, 1, k) = col.transpose();
      }
      h.block(1 + k, 1 + k, m, m) = ((F - 2.0 * a * f + 2.0 * a * a) / F) * Matrix::Identity(m, m);
      return h;
    }
    case PointCase::General:
      break;
  }
  throw Error("special_case_hessian needs a degenerate case");
}

PointCase nearest_degenerate(const Classification& c) {
  const bool v_small = c.calV_norm < kContinuityAnnulus * c.calV_threshold;
  const bool y_small = c.calY_norm < kContinuityAnnulus * c.calY_threshold;
  if (v_small && y_small) return PointCase::VY0;
  if (v_small) return PointCase::V0;
  if (y_small) return PointCase::Y0;
  return PointCase::General;
}

std::vector<int> index_range(int first, int last_inclusive) {
  std::vector<int> out;
  for (int i = first; i <= last_inclusive; ++i) out.push_back(i);
  return out;
}

Matrix take(const Matrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(rows[i], cols[j]);
    }
  }
  return out;
}

double identity_gap(const Matrix& block, double diagonal) {
  if (block.size() == 0) return 0.0;
  return max_abs(block - diagonal * Matrix::Identity(block.rows(), block.cols()));
}

}  // namespace

Matrix hessian_general_formula(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta) {
  const BusemannState s = vy_state(alg, x, theta);
  const int k = alg.k();
  const int m = alg.m();
  const int n = alg.dim();
  const double a = x.a;
  const double root_a = std::sqrt(a);
  const double f = s.f;
  const double F = s.F;
  const double F2 = F * F;
  const Vector& V = s.calV;
  const Vector& Y = s.calY;
  const Vector jy = alg.j_map(Y, V);
  const Vector w = f * V - jy;
  const Vector u = (f - 2.0 * a) * V - jy;
  const Matrix bv = bracket_rows(alg, V);
  const Matrix bu = bracket_rows(alg, u);

  Matrix h(n, n);
  h(0, 0) = 2.0 * a / F2 * (f * F + a * F - 2.0 * a * f * f);
  const Vector b0i = -root_a / (2.0 * F2) * ((f * F + 2.0 * a * F - 4.0 * a * f * f) * V + (4.0 * a * f - F) * jy);
  const Vector b0z = 2.0 * a / F2 * (2.0 * a * f - F) * Y;
  h.block(0, 1, 1, k) = b0i.transpose();
  h.block(1, 0, k, 1) = b0i;
  h.block(0, 1 + k, 1, m) = b0z.transpose();
  h.block(1 + k, 0, m, 1) = b0z;

  h.block(1, 1, k, k) = a / (2.0 * F) * (V * V.transpose() + bv.transpose() * bv) - a / F2 * w * w.transpose() +
                        0.5 * Matrix::Identity(k, k);

  const Matrix biz = -2.0 * a * root_a / F2 * w * Y.transpose() - root_a / (2.0 * F) * bu.transpose();
  h.block(1, 1 + k, k, m) = biz;
  h.block(1 + k, 1, m, k) = biz.transpose();

  h.block(1 + k, 1 + k, m, m) = -4.0 * a * a / F2 * Y * Y.transpose() +
                                (F - 2.0 * a * f + 2.0 * a * a) / F * Matrix::Identity(m, m);
  return h;
}

HessianMatrix special_case_hessian(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta,
                                   PointCase which) {
  if (which == PointCase::General || which == PointCase::Infinity) {
    throw Error("special_case_hessian covers VY0, V0 and Y0 only");
  }
  const Classification c = classify(alg, x, theta);
  if (c.point_case != which) {
    throw Error("case mismatch: point is " + std::string(to_string(c.point_case)) + ", requested " +
                std::string(to_string(which)));
  }
  HessianMatrix out;
  out.point_case = which;
  out.entries = special_formula(alg, x, vy_state(alg, x, theta), which);
  return out;
}

HessianMatrix hessian_closed_form(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta) {
  const Classification c = classify(alg, x, theta);
  HessianMatrix out;
  out.point_case = c.point_case;
  if (c.point_case == PointCase::Infinity) {
    out.entries = infinity_hessian(alg);
    return out;
  }
  const BusemannState s = vy_state(alg, x, theta);
  if (c.point_case == PointCase::General) {
    out.entries = hessian_general_formula(alg, x, theta);
    const PointCase near = nearest_degenerate(c);
    if (near != PointCase::General) out.continuity_gap = max_abs(out.entries - special_formula(alg, x, s, near));
    return out;
  }
  out.entries = special_formula(alg, x, s, c.point_case);
  out.continuity_gap = max_abs(out.entries - hessian_general_formula(alg, x, theta));
  return out;
}

Matrix AdaptedBasis::frame_change() const {
  const int k = static_cast<int>(v_basis.size());
  const int m = static_cast<int>(z_basis.size());
  Matrix p = Matrix::Zero(k + m + 1, k + m + 1);
  p(0, 0) = 1.0;
  p.block(1, 1, k, k) = columns(v_basis, k);
  p.block(1 + k, 1 + k, m, m) = columns(z_basis, m);
  return p;
}

AdaptedBasis adapted_basis(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta) {
  if (theta.is_infinity()) throw Error("adapted basis is undefined at infinity");
  const Classification c = classify(alg, x, theta);
  const BusemannState s = vy_state(alg, x, theta);
  const int k = alg.k();
  const int m = alg.m();
  const bool v_ok = c.point_case == PointCase::General || c.point_case == PointCase::Y0;
  const bool y_ok = c.point_case == PointCase::General || c.point_case == PointCase::V0;
  if (!v_ok && !y_ok) throw Error("degenerate calV and calY: no adapted basis");

  AdaptedBasis out;
  if (y_ok) {
    out.z_basis.push_back(s.calY / s.calY.norm());
    for (Vector& z : complete_orthonormal(out.z_basis, m)) out.z_basis.push_back(std::move(z));
  } else {
    for (int r = 0; r < m; ++r) out.z_basis.push_back(Vector::Unit(m, r));
  }

  if (v_ok) {
    const Vector e1 = s.calV / s.calV.norm();
    std::vector<Vector> j_part;
    for (const Vector& z : out.z_basis) j_part.push_back(alg.j_map(z, e1));
    std::vector<Vector> seed{e1};
    seed.insert(seed.end(), j_part.begin(), j_part.end());
    out.v_basis.push_back(e1);
    for (Vector& e : complete_orthonormal(seed, k)) out.v_basis.push_back(std::move(e));
    out.v_basis.insert(out.v_basis.end(), j_part.begin(), j_part.end());
  } else {
    for (int i = 0; i < k; ++i) out.v_basis.push_back(Vector::Unit(k, i));
  }
  if (static_cast<int>(out.v_basis.size()) != k || static_cast<int>(out.z_basis.size()) != m) {
    throw Error("adapted basis completion failed");
  }
  return out;
}

BlockDecomposition block_decomposition(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta) {
  if (theta.is_infinity()) throw Error("block decomposition needs the general case (got inf)");
  const Classification c = classify(alg, x, theta);
  if (c.point_case != PointCase::General) {
    throw Error("block decomposition needs the general case (got " + std::string(to_string(c.point_case)) + ")");
  }
  const int k = alg.k();
  const int m = alg.m();
  const int km = k - m;
  if (km < 1) throw Error("block decomposition needs k >= m + 1");

  const BusemannState s = vy_state(alg, x, theta);
  const AdaptedBasis basis = adapted_basis(alg, x, theta);
  const Matrix p = basis.frame_change();

  BlockDecomposition out;
  out.adapted = p.transpose() * hessian_general_formula(alg, x, theta) * p;
  const Matrix& h = out.adapted;

  const double a = x.a;
  const double f = s.f;
  const double F = s.F;
  const double F2 = F * F;
  const double v_norm = s.calV.norm();
  const double y_norm = s.calY.norm();
  const double f_minus_a = 0.25 * v_norm * v_norm;  // f - a
  const double root_fa = 0.5 * v_norm;              // sqrt(f - a)
  const double root_a = std::sqrt(a);

  out.b1 = 0.5 + 2.0 * a * f_minus_a / F;
  out.b2 = 1.0 - 2.0 * a * f_minus_a / F;
  out.b3 = (f - 2.0 * a) * root_a * root_fa / F;
  out.b4 = -a * f_minus_a * y_norm * y_norm / F2;

  const std::vector<int> b1_idx{0, 1, km + 1, k + 1};
  const std::vector<int> kernel = index_range(2, km);
  const std::vector<int> j_rest = index_range(km + 2, k);
  const std::vector<int> z_rest = index_range(k + 2, k + m);

  out.B1 = take(h, b1_idx, b1_idx);
  out.B2 = take(h, kernel, z_rest);
  const Matrix zj = take(h, z_rest, j_rest);
  out.B3 = zj - out.b3 * Matrix::Identity(zj.rows(), zj.cols());

  std::vector<int> cal_idx = kernel;
  cal_idx.insert(cal_idx.end(), j_rest.begin(), j_rest.end());
  cal_idx.insert(cal_idx.end(), z_rest.begin(), z_rest.end());
  out.calB = take(h, cal_idx, cal_idx);

  // Closed-form entries of B1 (row/col order 0, 1, k-m+1, k+1).
  Matrix b1c(4, 4);
  const double b00 = 2.0 * a / F2 * (f * F + a * F - 2.0 * a * f * f);
  const double b10 = -(f * F + 2.0 * a * F - 4.0 * a * f * f) * root_a * root_fa / F2;
  const double b20 = -(4.0 * a * f - F) * root_a * root_fa * y_norm / F2;
  const double b30 = 2.0 * a / F2 * (2.0 * a * f - F) * y_norm;
  const double b11 = -2.0 * a / F2 * f_minus_a * (2.0 * f * f - F) + 0.5;
  const double b21 = 4.0 * a * f / F2 * f_minus_a * y_norm;
  const double b22 = 0.5 + 2.0 * a / F2 * f_minus_a * (2.0 * f * f - F);
  const double b33 = 1.0 - b00;
  b1c << b00, b10, b20, b30,
         b10, b11, b21, b20,
         b20, b21, b22, -b10,
         b30, b20, -b10, b33;

  // Closed forms of B2 and B3.
  const Vector jy = alg.j_map(s.calY, s.calV);
  Matrix b2c(static_cast<Eigen::Index>(kernel.size()), static_cast<Eigen::Index>(z_rest.size()));
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    const Vector br = alg.bracket(basis.v_basis[static_cast<std::size_t>(kernel[i] - 1)], jy);
    for (int r = 1; r < m; ++r) b2c(static_cast<Eigen::Index>(i), r - 1) = root_a / (2.0 * F) * br.dot(basis.z_basis[r]);
  }
  Matrix b3c(m - 1, m - 1);
  for (int l = 1; l < m; ++l) {
    const Vector br = alg.bracket(alg.j_map(basis.z_basis[l], s.calV), jy);
    for (int r = 1; r < m; ++r) b3c(r - 1, l - 1) = root_a / (2.0 * F * v_norm) * br.dot(basis.z_basis[r]);
  }

  std::vector<int> rest;
  for (int i = 0; i < alg.dim(); ++i) {
    if (std::find(b1_idx.begin(), b1_idx.end(), i) == b1_idx.end()) rest.push_back(i);
  }
  double residual = std::max({asymmetry(h), max_abs(out.B1 - b1c), max_abs(take(h, b1_idx, rest)),
                              identity_gap(take(h, kernel, kernel), 0.5), max_abs(take(h, kernel, j_rest)),
                              identity_gap(take(h, j_rest, j_rest), out.b1),
                              identity_gap(take(h, z_rest, z_rest), out.b2)});
  if (out.B2.size() > 0) residual = std::max(residual, max_abs(out.B2 - b2c));
  if (out.B3.size() > 0) {
    residual = std::max({residual, max_abs(out.B3 + out.B3.transpose()), max_abs(out.B3 - b3c)});
  }
  out.layout_residual = residual;
  if (!(residual <= kLayoutTol)) {
    throw Error("block extraction mismatch: residual " + std::to_string(residual));
  }
  return out;
}

BlockIdentityReport verify_block_identities(const BlockDecomposition& blocks, double tol) {
  BlockIdentityReport rep;
  rep.tol = tol;
  if (blocks.B3.size() > 0) {
    const Eigen::Index n = blocks.B3.rows();
    rep.eq20 = max_abs(blocks.B3 * blocks.B3 - blocks.B2.transpose() * blocks.B2 - blocks.b4 * Matrix::Identity(n, n));
  }
  rep.eq21 = std::abs(blocks.b1 * blocks.b2 - blocks.b3 * blocks.b3 + blocks.b4 - 0.5);
  return rep;
}

BlockIdentityReport verify_block_identities(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta,
                                            double tol) {
  return verify_block_identities(block_decomposition(alg, x, theta), tol);
}

bool B1SpectrumReport::passed() const {
  return std::abs(det) < 1e-9 && std::abs(det_minus_one) < 1e-9 && std::abs(det_minus_half) < 1e-9 &&
         std::abs(trace - 2.0) < 1e-10 && spectrum_residual < tol;
}

B1SpectrumReport b1_spectrum_check(const BlockDecomposition& blocks, double tol) {
  const Matrix& b1 = blocks.B1;
  const Matrix id = Matrix::Identity(4, 4);
  B1SpectrumReport rep;
  rep.tol = tol;
  rep.det = symmetric_determinant(b1);
  rep.det_minus_one = symmetric_determinant(b1 - id);
  rep.det_minus_half = symmetric_determinant(b1 - 0.5 * id);
  rep.trace = b1.trace();
  rep.spectrum = spectrum(b1);
  rep.spectrum_residual = multiset_distance(rep.spectrum, {{0.0, 1}, {0.5, 2}, {1.0, 1}});
  return rep;
}

B1SpectrumReport b1_spectrum_check(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta, double tol) {
  return b1_spectrum_check(block_decomposition(alg, x, theta), tol);
}

double DetBReport::relative_gap() const {
  const double scale = std::max(std::abs(closed_value), std::abs(numeric_value));
  return scale == 0.0 ? 0.0 : std::abs(closed_value - numeric_value) / scale;
}

bool DetBReport::passed(double rel_tol, double slack) const {
  if (!(closed_value > 0.0) || !(numeric_value > 0.0) || !(relative_gap() <= rel_tol)) return false;
  for (double fac : factors) {
    if (!(fac > 0.0) || fac < factor_lower - slack) return false;
  }
  for (Eigen::Index r = 0; r < mu.size(); ++r) {
    if (mu(r) < -slack || mu(r) > mu_upper + slack) return false;
  }
  return factor_lower > 0.0 && gram_mismatch <= 1e-8 * std::max(1.0, mu_upper);
}

DetBReport det_B_closed(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta,
                        const BlockDecomposition& blocks) {
  const BusemannState s = vy_state(alg, x, theta);
  const AdaptedBasis basis = adapted_basis(alg, x, theta);
  const int k = alg.k();
  const int m = alg.m();
  const double a = x.a;
  const double F = s.F;
  const double v2 = s.calV.squaredNorm();
  const double y2 = s.calY.squaredNorm();
  const double f_minus_a = 0.25 * v2;

  // J_{z_r} J_calY calV = calV_r + J_{calY_r} calV with calV_r in ker(ad calV).
  const Vector jy = alg.j_map(s.calY, s.calV);
  const Vector e1 = s.calV / std::sqrt(v2);
  std::vector<Vector> j_part;
  for (const Vector& z : basis.z_basis) j_part.push_back(alg.j_map(z, e1));
  std::vector<Vector> kernel_parts;
  for (int r = 1; r < m; ++r) {
    Vector q = alg.j_map(basis.z_basis[r], jy);
    for (const Vector& u : j_part) q -= u.dot(q) * u;
    kernel_parts.push_back(std::move(q));
  }
  Matrix gram(m - 1, m - 1);
  for (int r = 0; r < m - 1; ++r) {
    for (int l = 0; l < m - 1; ++l) gram(r, l) = kernel_parts[r].dot(kernel_parts[l]);
  }

  DetBReport rep;
  rep.mu = spectrum(gram);
  rep.closed_value = std::pow(0.5, k - 2);
  for (Eigen::Index r = 0; r < rep.mu.size(); ++r) {
    const double fac = 1.0 - 2.0 * a * a * f_minus_a * rep.mu(r) / (F * F * F);
    rep.factors.push_back(fac);
    rep.closed_value *= fac;
  }
  rep.numeric_value = symmetric_determinant(blocks.calB);
  rep.mu_upper = v2 * y2;
  rep.factor_lower = 1.0 - a * a * v2 * v2 * y2 / (2.0 * F * F * F);
  if (gram.size() > 0) rep.gram_mismatch = max_abs(gram - (4.0 * F * F / a) * blocks.B2.transpose() * blocks.B2);
  return rep;
}

DetBReport det_B_closed(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta) {
  return det_B_closed(alg, x, theta, block_decomposition(alg, x, theta));
}

RestrictedPositivity restricted_positivity(const Matrix& hessian, const FrameVector& grad) {
  const Eigen::Index n = hessian.rows();
  const Vector unit = grad / grad.norm();
  const Matrix q = columns(complete_orthonormal({unit}, static_cast<int>(n)), static_cast<int>(n));
  const Matrix restricted = q.transpose() * hessian * q;
  RestrictedPositivity out;
  out.min_eigenvalue = spectrum(0.5 * (restricted + restricted.transpose()))(0);
  out.zero_direction_residual = (hessian * grad).norm();
  return out;
}

RestrictedPositivity restricted_positivity(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta) {
  return restricted_positivity(hessian_closed_form(alg, x, theta).entries, gradient(alg, x, theta));
}

std::vector<EigenCluster> expected_degenerate_spectrum(const Algebra& alg) {
  return {{0.0, 1}, {0.5, alg.k()}, {1.0, alg.m()}};
}

}  // namespace drkernel

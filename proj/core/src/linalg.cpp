#include "drkernel/linalg.hpp"

namespace drkernel {

std::vector<Vector> complete_orthonormal(const std::vector<Vector>& family, int dim, double pivot) {
  std::vector<Vector> basis = family;
  std::vector<Vector> added;
  for (int s = 0; s < dim && static_cast<int>(basis.size()) < dim; ++s) {
    Vector u = Vector::Unit(dim, s);
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& b : basis) u -= b.dot(u) * b;
    }
    const double norm = u.norm();
    if (norm > pivot) {
      u /= norm;
      basis.push_back(u);
      added.push_back(u);
    }
  }
  return added;
}

Matrix columns(const std::vector<Vector>& vectors, int rows) {
  Matrix out(rows, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t c = 0; c < vectors.size(); ++c) out.col(static_cast<Eigen::Index>(c)) = vectors[c];
  return out;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double asymmetry(const Matrix& m) { return max_abs(m - m.transpose()); }

}  // namespace drkernel

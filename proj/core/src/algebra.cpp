#include "drkernel/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "drkernel/linalg.hpp"
#include "drkernel/random.hpp"

namespace drkernel {
namespace {

// Left multiplication by i, j, k on the quaternions, basis (1, i, j, k).
std::vector<Matrix> quaternion_units() {
  Matrix li(4, 4), lj(4, 4), lk(4, 4);
  li << 0, -1, 0, 0,
        1, 0, 0, 0,
        0, 0, 0, -1,
        0, 0, 1, 0;
  lj << 0, 0, -1, 0,
        0, 0, 0, 1,
        1, 0, 0, 0,
        0, -1, 0, 0;
  lk << 0, 0, 0, -1,
        0, 0, -1, 0,
        0, 1, 0, 0,
        1, 0, 0, 0;
  return {li, lj, lk};
}

// Left multiplication by e_1..e_7 on the octonions, basis (1, e_1..e_7).
// Products follow the oriented Fano-plane triples below: e_a e_b = e_c.
std::vector<Matrix> octonion_units() {
  constexpr int kTriples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                                  {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
  // table[a][b] = (sign, index) of e_a e_b
  int sign[8][8] = {};
  int index[8][8] = {};
  for (int a = 0; a < 8; ++a) {
    sign[0][a] = sign[a][0] = 1;
    index[0][a] = index[a][0] = a;
  }
  for (int a = 1; a < 8; ++a) {
    sign[a][a] = -1;
    index[a][a] = 0;
  }
  for (const auto& t : kTriples) {
    const int cyc[3][3] = {{t[0], t[1], t[2]}, {t[1], t[2], t[0]}, {t[2], t[0], t[1]}};
    for (const auto& c : cyc) {
      sign[c[0]][c[1]] = 1;
      index[c[0]][c[1]] = c[2];
      sign[c[1]][c[0]] = -1;
      index[c[1]][c[0]] = c[2];
    }
  }
  std::vector<Matrix> out;
  for (int a = 1; a < 8; ++a) {
    Matrix l = Matrix::Zero(8, 8);
    for (int b = 0; b < 8; ++b) l(index[a][b], b) = sign[a][b];
    out.push_back(l);
  }
  return out;
}

std::vector<Matrix> base_generators(int m) {
  switch (m) {
    case 1: {
      Matrix j(2, 2);
      j << 0, -1,
           1, 0;
      return {j};
    }
    case 2: {
      auto q = quaternion_units();
      q.pop_back();
      return q;
    }
    case 3:
      return quaternion_units();
    case 7:
      return octonion_units();
    default:
      throw Error("unsupported Clifford signature: m = " + std::to_string(m) +
                  " (supported: 1, 2, 3, 7)");
  }
}

double inner(const Vector& a, const Vector& b) { return a.dot(b); }

}  // namespace

int irreducible_module_dim(int m) {
  switch (m) {
    case 1: return 2;
    case 2:
    case 3: return 4;
    case 7: return 8;
    default:
      throw Error("unsupported Clifford signature: m = " + std::to_string(m) +
                  " (supported: 1, 2, 3, 7)");
  }
}

std::vector<Matrix> build_clifford_generators(int m, int multiplicity) {
  const int d = irreducible_module_dim(m);
  if (multiplicity < 1) throw Error("multiplicity must be at least 1");
  if (multiplicity > kMaxVDim / d) {
    throw Error("dimension overflow: k = multiplicity * " + std::to_string(d) + " exceeds " +
                std::to_string(kMaxVDim));
  }
  const int k = multiplicity * d;
  std::vector<Matrix> out;
  for (const Matrix& base : base_generators(m)) {
    Matrix j = Matrix::Zero(k, k);
    for (int b = 0; b < multiplicity; ++b) j.block(b * d, b * d, d, d) = base;
    out.push_back(std::move(j));
  }
  return out;
}

GeneralizedHeisenbergAlgebra::GeneralizedHeisenbergAlgebra(std::vector<Matrix> generators,
                                                           std::optional<AlgebraDescriptor> descriptor)
    : generators_(std::move(generators)), descriptor_(descriptor) {
  if (generators_.empty()) throw Error("an algebra needs at least one generator");
  m_ = static_cast<int>(generators_.size());
  k_ = static_cast<int>(generators_.front().rows());
  if (k_ < m_) throw Error("dim v must be at least dim z");
  const Matrix id = Matrix::Identity(k_, k_);
  for (int r = 0; r < m_; ++r) {
    const Matrix& jr = generators_[r];
    if (jr.rows() != k_ || jr.cols() != k_) throw Error("generators must be square and equally sized");
    if (max_abs(jr + jr.transpose()) > 1e-12) throw Error("generator is not skew-symmetric");
    for (int l = r; l < m_; ++l) {
      const Matrix anti = jr * generators_[l] + generators_[l] * jr + (r == l ? 2.0 : 0.0) * id;
      if (max_abs(anti) > 1e-12) throw Error("generators violate the Clifford relations");
    }
    // A_ij^r = <J_r e_i, e_j> = (J_r)_{ji}
    structure_.push_back(jr.transpose());
  }
}

Matrix GeneralizedHeisenbergAlgebra::j_matrix(const Vector& Z) const {
  check_z(Z, "Z");
  Matrix out = Matrix::Zero(k_, k_);
  for (int r = 0; r < m_; ++r) out += Z(r) * generators_[r];
  return out;
}

Vector GeneralizedHeisenbergAlgebra::j_map(const Vector& Z, const Vector& U) const {
  check_z(Z, "Z");
  check_v(U, "U");
  Vector out = Vector::Zero(k_);
  for (int r = 0; r < m_; ++r) out += Z(r) * (generators_[r] * U);
  return out;
}

Vector GeneralizedHeisenbergAlgebra::bracket(const Vector& U, const Vector& W) const {
  check_v(U, "U");
  check_v(W, "W");
  Vector out(m_);
  for (int r = 0; r < m_; ++r) out(r) = inner(generators_[r] * U, W);
  return out;
}

void GeneralizedHeisenbergAlgebra::check_v(const Vector& U, const char* what) const {
  if (U.size() != k_) {
    throw Error(std::string("dimension mismatch: ") + what + " has length " + std::to_string(U.size()) +
                ", expected k = " + std::to_string(k_));
  }
}

void GeneralizedHeisenbergAlgebra::check_z(const Vector& Z, const char* what) const {
  if (Z.size() != m_) {
    throw Error(std::string("dimension mismatch: ") + what + " has length " + std::to_string(Z.size()) +
                ", expected m = " + std::to_string(m_));
  }
}

Algebra make_algebra(int m, int multiplicity) {
  return Algebra(build_clifford_generators(m, multiplicity), AlgebraDescriptor{m, multiplicity});
}

double IdentityReport::worst() const { return *std::max_element(max_residual.begin(), max_residual.end()); }

IdentityReport check_gh_identities(const Algebra& alg, int trials, double tol, std::uint64_t seed) {
  if (trials < 1) throw Error("trials must be at least 1");
  if (!(tol > 0.0)) throw Error("tolerance must be positive");
  const int k = alg.k();
  const int m = alg.m();
  Sampler rng(seed);
  IdentityReport rep;
  rep.trials = trials;
  rep.tol = tol;
  auto& res = rep.max_residual;
  auto bump = [&res](int idx, double v) { res[idx] = std::max(res[idx], v); };
  const Matrix id = Matrix::Identity(k, k);

  for (int t = 0; t < trials; ++t) {
    const Vector U = rng.ball(k, 2.0);
    const Vector V = rng.ball(k, 2.0);
    const Vector X = rng.ball(m, 2.0);
    const Vector Y = rng.ball(m, 2.0);
    const Matrix JX = alg.j_matrix(X);
    const Matrix JY = alg.j_matrix(Y);
    const Vector JXU = JX * U, JXV = JX * V, JYU = JY * U, JYV = JY * V;
    const double xy = X.dot(Y);
    const double uv = U.dot(V);

    bump(0, max_abs(JX * JY + JY * JX + 2.0 * xy * id));
    bump(1, std::abs(JXU.dot(V) + U.dot(JXV)));
    bump(2, std::abs(JXU.dot(JXV) - X.squaredNorm() * uv));
    bump(3, std::abs(JXU.dot(JYV) + JYU.dot(JXV) - 2.0 * uv * xy));
    bump(4, std::abs(JXU.dot(JYU) - U.squaredNorm() * xy));
    bump(5, (alg.bracket(JXU, V) - alg.bracket(U, JXV) + 2.0 * uv * X).cwiseAbs().maxCoeff());
    bump(6, (alg.bracket(JXU, JYU) - alg.bracket(U, JX * JYU)).cwiseAbs().maxCoeff());
    bump(7, (alg.bracket(JXU, JXV) + X.squaredNorm() * alg.bracket(U, V) + 2.0 * U.dot(JXV) * X)
                .cwiseAbs()
                .maxCoeff());
    bump(8, (alg.bracket(U, JXU) - U.squaredNorm() * X).cwiseAbs().maxCoeff());
  }
  return rep;
}

VDecomposition decompose_v(const Algebra& alg, const Vector& V, double tol) {
  alg.check_v(V, "V");
  const double norm = V.norm();
  if (!(norm > tol)) throw Error("degenerate vector: |V| <= tol");
  VDecomposition out;
  for (int r = 0; r < alg.m(); ++r) out.j_part.push_back(alg.generators()[r] * V / norm);
  out.kernel = complete_orthonormal(out.j_part, alg.k());
  return out;
}

}  // namespace drkernel

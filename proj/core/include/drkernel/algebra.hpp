#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "drkernel/types.hpp"

namespace drkernel {

/// Family parameters of a built-in algebra: m = dim z, and the number of
/// irreducible Clifford-module blocks making up v.
struct AlgebraDescriptor {
  int m = 1;
  int multiplicity = 1;

  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

/// Dimension of the irreducible module used for the given m (2, 4, 4, 8 for
/// m = 1, 2, 3, 7). Throws for any other m.
int irreducible_module_dim(int m);

/// Upper bound on k accepted by the builder.
inline constexpr int kMaxVDim = 1024;

/// Skew-symmetric orthogonal k x k matrices J_1..J_m with
/// J_r J_l + J_l J_r = -2 delta_rl I, where k = multiplicity * d(m).
///
/// Base cases: the 2x2 rotation generator (m = 1), left multiplication by
/// quaternion units i, j (m = 2) or i, j, k (m = 3) on R^4, and left
/// multiplication by the seven imaginary octonion units on R^8 (m = 7).
/// Larger modules are block-diagonal copies of the base case.
std::vector<Matrix> build_clifford_generators(int m, int multiplicity);

/// n = v (+) z with bracket <[U, W], e_{k+r}> = <J_r U, W>.
///
/// Immutable after construction.
class GeneralizedHeisenbergAlgebra {
 public:
  /// Takes ownership of J_1..J_m. Generators must be square, equally sized,
  /// skew-symmetric and satisfy the Clifford relations to 1e-12; k >= m.
  explicit GeneralizedHeisenbergAlgebra(std::vector<Matrix> generators,
                                        std::optional<AlgebraDescriptor> descriptor = {});

  int k() const { return k_; }
  int m() const { return m_; }
  /// dim S = k + m + 1.
  int dim() const { return k_ + m_ + 1; }

  const Matrix& J(int r) const { return generators_.at(static_cast<std::size_t>(r)); }
  const std::vector<Matrix>& generators() const { return generators_; }

  /// A_{ij}^r = <[e_i, e_j], e_{k+r}> = <J_r e_i, e_j>; zero-based indices.
  double structure_constant(int i, int j, int r) const { return structure_[r](i, j); }
  /// The k x k matrix (A_{ij}^r)_{ij} for fixed r.
  const Matrix& structure_matrix(int r) const { return structure_.at(static_cast<std::size_t>(r)); }

  /// J_Z = sum_r Z^r J_r.
  Matrix j_matrix(const Vector& Z) const;
  /// J_Z U.
  Vector j_map(const Vector& Z, const Vector& U) const;
  /// z-valued bracket [U, W]_n.
  Vector bracket(const Vector& U, const Vector& W) const;

  const std::optional<AlgebraDescriptor>& descriptor() const { return descriptor_; }

  void check_v(const Vector& U, const char* what) const;
  void check_z(const Vector& Z, const char* what) const;

 private:
  int k_ = 0;
  int m_ = 0;
  std::vector<Matrix> generators_;
  std::vector<Matrix> structure_;
  std::optional<AlgebraDescriptor> descriptor_;
};

using Algebra = GeneralizedHeisenbergAlgebra;

/// Builds the algebra on the Clifford module of build_clifford_generators.
Algebra make_algebra(int m, int multiplicity);
inline Algebra make_algebra(const AlgebraDescriptor& d) { return make_algebra(d.m, d.multiplicity); }

/// Free-function spellings of the member operations.
inline Vector bracket_n(const Algebra& alg, const Vector& U, const Vector& W) { return alg.bracket(U, W); }
inline Vector j_map(const Algebra& alg, const Vector& Z, const Vector& U) { return alg.j_map(Z, U); }

/// Max absolute residual of each of the nine standard identities of a
/// generalized Heisenberg algebra, over random U, V in v and X, Y in z:
///
///   0: J_X J_Y + J_Y J_X = -2<X,Y> id
///   1: <J_X U, V> = -<U, J_X V>
///   2: <J_X U, J_X V> = |X|^2 <U,V>
///   3: <J_X U, J_Y V> + <J_Y U, J_X V> = 2<U,V><X,Y>
///   4: <J_X U, J_Y U> = |U|^2 <X,Y>
///   5: [J_X U, V] - [U, J_X V] = -2<U,V> X
///   6: [J_X U, J_Y U] = [U, J_X J_Y U]
///   7: [J_X U, J_X V] = -|X|^2 [U,V] - 2<U, J_X V> X
///   8: [U, J_X U] = |U|^2 X
struct IdentityReport {
  std::array<double, 9> max_residual{};
  int trials = 0;
  double tol = 0.0;

  double worst() const;
  bool passed() const { return worst() < tol; }
};

/// Samples have norm <= 2. Requires trials >= 1 and tol > 0.
IdentityReport check_gh_identities(const Algebra& alg, int trials, double tol, std::uint64_t seed);

/// Orthogonal splitting v = ker(ad V) (+) J_z V.
struct VDecomposition {
  std::vector<Vector> kernel;  ///< k - m orthonormal vectors spanning ker(ad V)
  std::vector<Vector> j_part;  ///< J_r V / |V|, r = 1..m
};

/// Throws Error("degenerate vector") when |V| <= tol.
VDecomposition decompose_v(const Algebra& alg, const Vector& V, double tol = 1e-12);

}  // namespace drkernel

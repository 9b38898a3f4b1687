#pragma once

#include <vector>

#include "drkernel/types.hpp"

namespace drkernel {

struct SymmetricEigen {
  Vector values;   ///< ascending
  Matrix vectors;  ///< column j pairs with values(j); empty unless requested
  int sweeps = 0;
};

/// Cyclic Jacobi diagonalization of a symmetric matrix. Sweeps until the
/// off-diagonal Frobenius norm drops below 1e-12 (scaled by max(1, ||A||_F)).
/// Throws Error if |A - A^T| exceeds 1e-9.
SymmetricEigen jacobi_eigen(const Matrix& a, bool want_vectors = false);

/// Ascending eigenvalues of a symmetric matrix.
Vector spectrum(const Matrix& a);

/// Product of the eigenvalues; 1 for an empty matrix.
double symmetric_determinant(const Matrix& a);

struct EigenCluster {
  double value = 0.0;
  int multiplicity = 0;
};

/// Groups ascending eigenvalues whose consecutive gaps are below `gap`.
std::vector<EigenCluster> cluster_eigenvalues(const Vector& ascending, double gap = 1e-6);

/// Max distance between a sorted spectrum and the sorted multiset described
/// by `expected`; +inf when the sizes differ.
double multiset_distance(const Vector& ascending, const std::vector<EigenCluster>& expected);

}  // namespace drkernel

#pragma once

#include <vector>

#include "drkernel/types.hpp"

namespace drkernel {

/// Extends an orthonormal family to an orthonormal basis of R^dim.
///
/// Candidates are the standard basis vectors in index order; a candidate is
/// accepted when its residual after projection exceeds `pivot`. Projection is
/// applied twice. Returns only the new vectors.
std::vector<Vector> complete_orthonormal(const std::vector<Vector>& family, int dim,
                                         double pivot = 1e-8);

/// Columns of the returned matrix are the given vectors.
Matrix columns(const std::vector<Vector>& vectors, int rows);

double max_abs(const Matrix& m);

/// max |M - M^T|
double asymmetry(const Matrix& m);

}  // namespace drkernel

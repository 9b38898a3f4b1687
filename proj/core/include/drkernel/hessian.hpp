#pragma once

#include <limits>
#include <vector>

#include "drkernel/busemann.hpp"
#include "drkernel/spectrum.hpp"

namespace drkernel {

enum class BasisTag { Standard, Adapted };

/// Hessian components b_{alpha,beta} = E_alpha(E_beta b) - (nabla_{E_alpha} E_beta) b.
struct HessianMatrix {
  Matrix entries;
  BasisTag basis = BasisTag::Standard;
  PointCase point_case = PointCase::General;
  /// Max entrywise gap between the special-case formula and the general one,
  /// filled when the point sits inside the annulus around the degeneracy
  /// threshold; NaN otherwise.
  double continuity_gap = std::numeric_limits<double>::quiet_NaN();
};

/// Dispatching closed form: diag(0, 1/2 I_k, I_m) at infinity, the
/// degenerate-case formulas when calV or calY vanish, the general entrywise
/// formula otherwise.
HessianMatrix hessian_closed_form(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta);

/// The general entrywise formula without dispatch. Defined for every finite
/// theta (F > 0 always).
Matrix hessian_general_formula(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta);

/// Closed form for a designated degenerate case (VY0, V0 or Y0). Throws
/// Error("case mismatch") if the point is not in that case.
HessianMatrix special_case_hessian(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta,
                                   PointCase which);

/// Orthonormal bases of v and z adapted to (calV, calY).
///
/// v_basis order: e_1 = calV/|calV|; e_2..e_{k-m} completing ker(ad calV);
/// e_{(k-m)+r} = J_{z_r} e_1. z_basis: z_1 = calY/|calY|, then a completion
/// of calY^perp. For Y0 points z_basis is the standard basis; for V0 points
/// v_basis is the standard basis.
struct AdaptedBasis {
  std::vector<Vector> v_basis;
  std::vector<Vector> z_basis;

  /// Orthogonal (k+m+1)-square matrix diag(1, [v_basis], [z_basis]).
  Matrix frame_change() const;
};

/// Throws Error naming calV or calY when the one the basis needs is degenerate.
AdaptedBasis adapted_basis(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta);

/// Block structure of the general-case Hessian in the adapted basis.
///
/// Adapted frame index layout (zero-based, within the (k+m+1)-square matrix):
/// 0 -> E_0, 1 -> e_1, 2..k-m -> kernel, k-m+1..k -> J-part, k+1..k+m -> z.
struct BlockDecomposition {
  Matrix adapted;  ///< Hessian in the adapted frame
  Matrix B1;       ///< rows/cols {0, 1, k-m+1, k+1}
  Matrix B2;       ///< (k-m-1) x (m-1): kernel rows, z_{r>=2} columns
  Matrix B3;       ///< (m-1) x (m-1) skew: (b_{k+r,(k-m)+l}) - b3 I
  double b1 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;
  double b4 = 0.0;
  Matrix calB;     ///< kernel, J_{r>=2}, z_{r>=2} submatrix, (k+m-3)-square
  double layout_residual = 0.0;  ///< max deviation from the closed-form layout
};

/// Requires the general case. Throws Error("block extraction mismatch") when
/// the extracted blocks disagree with their closed forms beyond 1e-9.
BlockDecomposition block_decomposition(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta);

struct BlockIdentityReport {
  double eq20 = 0.0;  ///< max |B3^2 - B2^T B2 - b4 I|
  double eq21 = 0.0;  ///< |b1 b2 - b3^2 + b4 - 1/2|
  double tol = 0.0;
  bool passed() const { return eq20 < tol && eq21 < tol; }
};

BlockIdentityReport verify_block_identities(const Algebra& alg, const GroupPoint& x,
                                            const BoundaryPoint& theta, double tol);
BlockIdentityReport verify_block_identities(const BlockDecomposition& blocks, double tol);

/// det(B1), det(B1 - I), det(B1 - I/2), tr(B1) and the spectrum of B1,
/// which should be {0, 1/2, 1/2, 1}.
struct B1SpectrumReport {
  double det = 0.0;
  double det_minus_one = 0.0;
  double det_minus_half = 0.0;
  double trace = 0.0;
  Vector spectrum;
  double spectrum_residual = 0.0;
  double tol = 0.0;
  bool passed() const;
};

B1SpectrumReport b1_spectrum_check(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta,
                                   double tol);
B1SpectrumReport b1_spectrum_check(const BlockDecomposition& blocks, double tol);

/// Product formula det(calB) = (1/2)^{k-2} prod_{r=2}^m (1 - 2a^2(f-a) mu_r / F^3),
/// mu_r the eigenvalues of the Gram matrix <calV_r, calV_l> of the
/// ker(ad calV)-components of J_{z_r} J_calY calV.
struct DetBReport {
  double closed_value = 0.0;
  double numeric_value = 0.0;  ///< product of eigenvalues of the extracted calB
  std::vector<double> factors;
  Vector mu;
  double mu_upper = 0.0;       ///< |calV|^2 |calY|^2
  double factor_lower = 0.0;   ///< 1 - a^2 |calV|^4 |calY|^2 / (2 F^3)
  double gram_mismatch = 0.0;  ///< max |Gram - (4F^2/a) B2^T B2|

  double relative_gap() const;
  /// Every check at the given absolute slack on mu and factors.
  bool passed(double rel_tol = 1e-8, double slack = 1e-10) const;
};

DetBReport det_B_closed(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta);
DetBReport det_B_closed(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta,
                        const BlockDecomposition& blocks);

struct RestrictedPositivity {
  double min_eigenvalue = 0.0;          ///< smallest eigenvalue on grad(b)^perp
  double zero_direction_residual = 0.0; ///< |H grad(b)|
};

RestrictedPositivity restricted_positivity(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta);
RestrictedPositivity restricted_positivity(const Matrix& hessian, const FrameVector& grad);

/// Spectrum predicted for infinity and the degenerate cases:
/// {0 x 1, 1/2 x k, 1 x m}.
std::vector<EigenCluster> expected_degenerate_spectrum(const Algebra& alg);

}  // namespace drkernel

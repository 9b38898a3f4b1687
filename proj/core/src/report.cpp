#include "drkernel/report.hpp"

#include <cmath>

#include "drkernel/linalg.hpp"

namespace drkernel {
namespace {

// Records the first failed check.
struct Verdict {
  std::string first_failure;
  void require(bool ok, const char* what) {
    if (!ok && first_failure.empty()) first_failure = what;
  }
};

}  // namespace

HessianReport evaluate_point(const Algebra& alg, const GroupPoint& x, const BoundaryPoint& theta,
                             const CheckTolerances& tol, int id) {
  HessianReport rep;
  rep.id = id;
  rep.point = x;
  rep.theta = theta;
  Verdict verdict;
  try {
    const HessianMatrix closed = hessian_closed_form(alg, x, theta);
    rep.point_case = closed.point_case;
    const FrameVector grad = gradient(alg, x, theta);
    rep.gradient_norm = grad.norm();
    rep.symmetry_residual = asymmetry(closed.entries);
    rep.spectrum = spectrum(closed.entries);
    rep.continuity_gap = closed.continuity_gap;
    if (rep.continuity_gap > tol.continuity_warning) rep.warning = "special and general formulas disagree near threshold";
    const RestrictedPositivity pos = restricted_positivity(closed.entries, grad);
    rep.min_on_complement = pos.min_eigenvalue;
    rep.kernel_residual = pos.zero_direction_residual;

    const oracle::NumericHessian numeric = oracle::numeric_hessian(alg, x, theta, tol.fd);
    const oracle::Comparison cmp = oracle::compare(closed, numeric.hessian, tol.fd);
    rep.max_oracle_diff = cmp.max_abs_diff;
    rep.oracle_asymmetry = numeric.asymmetry;

    verdict.require(std::abs(rep.gradient_norm - 1.0) < tol.unit_gradient, "unit gradient");
    verdict.require(rep.symmetry_residual < tol.symmetry, "symmetry");
    verdict.require(rep.kernel_residual < tol.kernel, "gradient in kernel");
    verdict.require(cmp.passed, "oracle agreement");

    if (is_degenerate(rep.point_case)) {
      rep.spectrum_residual = multiset_distance(rep.spectrum, expected_degenerate_spectrum(alg));
      verdict.require(rep.spectrum_residual < tol.degenerate_spectrum, "degenerate spectrum");
      verdict.require(rep.min_on_complement >= 0.5 - tol.degenerate_spectrum, "positivity on complement");
    } else {
      const BlockDecomposition blocks = block_decomposition(alg, x, theta);
      const BlockIdentityReport ids = verify_block_identities(blocks, tol.eq20);
      const B1SpectrumReport b1 = b1_spectrum_check(blocks, tol.b1);
      const DetBReport det = det_B_closed(alg, x, theta, blocks);
      rep.blocks = BlockSummary{ids.eq20, ids.eq21, b1.trace, det.closed_value, det.numeric_value};

      verdict.require(ids.eq20 < tol.eq20, "eq20 identity");
      verdict.require(ids.eq21 < tol.eq21, "eq21 identity");
      verdict.require(b1.passed(), "B1 spectrum");
      verdict.require(det.passed(tol.det_relative, tol.mu_slack), "det(B) chain");
      verdict.require(rep.min_on_complement > 0.0, "positivity on complement");
      int near_zero = 0;
      for (Eigen::Index i = 0; i < rep.spectrum.size(); ++i) {
        if (std::abs(rep.spectrum(i)) < tol.kernel) ++near_zero;
      }
      verdict.require(near_zero == 1 && rep.spectrum(0) > -1e-8, "general spectrum");
    }
  } catch (const Error& e) {
    verdict.require(false, "exception");
    rep.failure = std::string("exception: ") + e.what();
    rep.pass = false;
    return rep;
  }
  rep.failure = verdict.first_failure;
  rep.pass = rep.failure.empty();
  return rep;
}

}  // namespace drkernel

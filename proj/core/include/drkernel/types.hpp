#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace drkernel {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Coefficients of a tangent vector in the left-invariant frame
/// {E_0, E_1..E_k, E_{k+1}..E_{k+m}}; index 0 is the E_0 = a d/da direction.
using FrameVector = Eigen::VectorXd;

/// Raised for precondition violations and unsupported inputs.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace drkernel

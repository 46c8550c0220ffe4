#pragma once

#include <Eigen/Dense>

namespace locfin::detail {

struct SymmetricEigen {
  /// Ascending.
  Eigen::VectorXd values;
  /// Orthonormal columns; empty when only values were requested.
  Eigen::MatrixXd vectors;
};

/// LAPACK dsyevd. Eigen's own tridiagonal QR gives up on some of the
/// highly degenerate spectra produced by the clique families, the divide
/// and conquer driver does not. Throws ConvergenceError on failure.
SymmetricEigen symmetricEigen(const Eigen::MatrixXd& a, bool wantVectors);

}  // namespace locfin::detail

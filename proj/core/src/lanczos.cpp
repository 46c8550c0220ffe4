// Thick-restart Lanczos for one end of the spectrum of a sparse symmetric
// operator. The basis is kept fully orthogonal (classical Gram-Schmidt,
// applied twice), and the projected matrix is assembled from the
// Gram-Schmidt coefficients, so after a restart the retained Ritz vectors
// and the continuation vector need no special bookkeeping.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "locfin/spectral.hpp"
#include "symmetric_eigen.hpp"

namespace locfin {

namespace {

struct RitzPair {
  double value = 0.0;
  double residual = 0.0;
};

Eigen::VectorXd startVector(std::size_t n) {
  // All-ones plus a fixed pseudo-random perturbation: all-ones alone is
  // orthogonal to whole eigenspaces of regular graphs.
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = 1.0 + jitter(rng);
  return v.normalized();
}

Eigen::VectorXd applyOp(const SymmetricOperator& op, const Eigen::VectorXd& x) {
  Eigen::VectorXd y(x.size());
  op.apply(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())),
           std::span<double>(y.data(), static_cast<std::size_t>(y.size())));
  return y;
}

RitzPair lanczosEnd(const SymmetricOperator& op, bool largest, double tol, const LanczosOptions& opt) {
  const auto n = static_cast<Eigen::Index>(op.dimension());
  const double norm = op.infNorm();
  const double target = tol * norm;
  const auto m = static_cast<Eigen::Index>(std::min<std::size_t>(std::max<std::size_t>(opt.subspace, 4), op.dimension()));
  const auto keep = std::clamp<Eigen::Index>(static_cast<Eigen::Index>(opt.keep), 1, std::max<Eigen::Index>(m - 2, 1));

  Eigen::MatrixXd basis(n, m);
  Eigen::MatrixXd projected = Eigen::MatrixXd::Zero(m, m);
  basis.col(0) = startVector(op.dimension());
  Eigen::VectorXd continuation;
  Eigen::Index filled = 1;
  double lastResidual = std::numeric_limits<double>::infinity();
  double bestResidual = lastResidual;
  std::size_t bestAt = 0;
  std::size_t cycles = 0;
  bool exhausted = false;

  for (std::size_t restart = 0; restart <= opt.maxRestarts; ++restart) {
    cycles = restart;
    bool invariant = false;
    for (Eigen::Index j = filled - 1; j < m; ++j) {
      Eigen::VectorXd w = applyOp(op, basis.col(j));
      const auto cols = basis.leftCols(j + 1);
      Eigen::VectorXd h = cols.transpose() * w;
      w -= cols * h;
      const Eigen::VectorXd h2 = cols.transpose() * w;
      w -= cols * h2;
      h += h2;
      projected.block(0, j, j + 1, 1) = h;
      projected.block(j, 0, 1, j + 1) = h.transpose();
      const double beta = w.norm();
      filled = j + 1;
      if (beta <= 1e-13 * std::max(norm, 1.0)) {
        invariant = true;
        break;
      }
      if (j + 1 < m) {
        basis.col(j + 1) = w / beta;
      } else {
        continuation = w / beta;
      }
    }

    const auto k = filled;
    const auto small = detail::symmetricEigen(projected.topLeftCorner(k, k), true);
    const Eigen::VectorXd& theta = small.values;
    const Eigen::MatrixXd& s = small.vectors;
    const Eigen::Index pick = largest ? k - 1 : 0;

    Eigen::VectorXd ritz = basis.leftCols(k) * s.col(pick);
    if (invariant || k < m) {
      // Krylov space exhausted: the Ritz pair is exact up to rounding.
      ritz.normalize();
      lastResidual = (applyOp(op, ritz) - theta[pick] * ritz).norm();
      if (lastResidual <= target) return {theta[pick], lastResidual};
      exhausted = true;
      break;
    }
    ritz.normalize();
    lastResidual = (applyOp(op, ritz) - theta[pick] * ritz).norm();
    if (lastResidual <= target) return {theta[pick], lastResidual};
    // Stagnation: no 1% gain on the best residual over the last 25 cycles.
    if (lastResidual < 0.99 * bestResidual) {
      bestResidual = lastResidual;
      bestAt = restart;
    } else if (restart - bestAt >= 25) {
      break;
    }

    // Keep the `keep` Ritz vectors nearest the wanted end, then the continuation vector.
    const Eigen::VectorXd next = continuation;
    Eigen::MatrixXd kept(n, keep);
    for (Eigen::Index i = 0; i < keep; ++i) {
      const Eigen::Index idx = largest ? k - 1 - i : i;
      kept.col(i) = basis.leftCols(k) * s.col(idx);
    }
    basis.leftCols(keep) = kept;
    // Re-orthonormalize against rounding drift.
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis.leftCols(keep));
    basis.leftCols(keep) = qr.householderQ() * Eigen::MatrixXd::Identity(n, keep);
    Eigen::VectorXd cont = next - basis.leftCols(keep) * (basis.leftCols(keep).transpose() * next);
    if (cont.norm() < 1e-10) {
      // Continuation direction lost; fall back to the residual of the best Ritz vector.
      cont = applyOp(op, basis.col(0));
      cont -= basis.leftCols(keep) * (basis.leftCols(keep).transpose() * cont);
    }
    basis.col(keep) = cont.normalized();
    projected.setZero();
    // Projected block of the kept vectors; rebuilt from scratch so drift cannot accumulate.
    for (Eigen::Index i = 0; i < keep; ++i) {
      const Eigen::VectorXd av = applyOp(op, basis.col(i));
      projected.block(0, i, keep, 1) = basis.leftCols(keep).transpose() * av;
    }
    projected.topLeftCorner(keep, keep) =
        0.5 * (projected.topLeftCorner(keep, keep) + projected.topLeftCorner(keep, keep).transpose()).eval();
    filled = keep + 1;
  }

  std::ostringstream msg;
  msg << "Lanczos did not reach residual " << target << " (" << tol << " * ||A||_inf) for the "
      << (largest ? "largest" : "smallest") << " eigenvalue after " << cycles
      << " restarts; last residual " << lastResidual;
  if (exhausted) msg << " (the Krylov space became invariant, so this is the rounding floor)";
  throw ConvergenceError(msg.str(), lastResidual);
}

}  // namespace

SpectralReport extremalEigenvalues(const SymmetricOperator& op, Which which, double tol,
                                   const LanczosOptions& options) {
  if (op.dimension() < 2) throw std::domain_error("extremal eigenvalues need dimension >= 2");
  if (!(tol > 0.0)) throw std::invalid_argument("eigensolver tolerance must be positive");
  SpectralReport report;
  report.full = false;
  report.method = Method::Iterative;
  report.tolerance = tol;
  if (which != Which::Max) {
    auto low = lanczosEnd(op, false, tol, options);
    report.eigenvalues.push_back(low.value);
    report.residualNorms.push_back(low.residual);
  }
  if (which != Which::Min) {
    auto high = lanczosEnd(op, true, tol, options);
    report.eigenvalues.push_back(high.value);
    report.residualNorms.push_back(high.residual);
  }
  return report;
}

}  // namespace locfin

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "locfin/family.hpp"
#include "locfin/graph.hpp"

namespace locfin {

/// Sparse symmetric real matrix stored by rows. Symmetry of the stored
/// structure is checked on construction.
class SymmetricOperator {
public:
  struct Entry {
    std::size_t col = 0;
    double value = 0.0;
  };

  SymmetricOperator() = default;
  SymmetricOperator(std::size_t dimension, std::vector<std::vector<Entry>> rows);

  std::size_t dimension() const { return rows_.size(); }
  std::span<const Entry> row(std::size_t i) const { return rows_.at(i); }
  double entry(std::size_t i, std::size_t j) const;

  /// y = A x.
  void apply(std::span<const double> x, std::span<double> y) const;

  /// Maximum absolute row sum.
  double infNorm() const;

  /// Row-major dense copy.
  std::vector<double> toDense() const;

private:
  std::vector<std::vector<Entry>> rows_;
};

/// (A f)(x) = sum_{y~x} E(x,y) f(y).
SymmetricOperator adjacencyMatrix(const FiniteGraph& g);

/// Positive semidefinite Laplacian: diagonal sum_y E(x,y), off-diagonal
/// -E(x,y). This is minus the operator f -> sum_y E(x,y)(f(y) - f(x)).
SymmetricOperator laplacianMatrix(const FiniteGraph& g);

/// a - b for operators of equal dimension.
SymmetricOperator difference(const SymmetricOperator& a, const SymmetricOperator& b);

enum class Method { Dense, Iterative };
enum class Which { Min, Max, Both };

const char* toString(Method m);

/// Default tolerances shared by every report and check.
struct Tolerances {
  double denseResidual = 1e-10;
  double iterativeResidual = 1e-8;
  double absoluteSlack = 1e-7;
  double relativeSlack = 1e-9;
  std::size_t denseCap = 4000;
};

struct LanczosOptions {
  std::size_t subspace = 80;
  std::size_t keep = 24;
  std::size_t maxRestarts = 400;
};

struct SpectralReport {
  /// Sorted ascending. All eigenvalues when `full`, else the requested extremes.
  std::vector<double> eigenvalues;
  bool full = false;
  Method method = Method::Dense;
  /// ||A v - lambda v|| for each reported pair, same order as eigenvalues.
  std::vector<double> residualNorms;
  double tolerance = 0.0;
  std::string graphRef;

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

/// The iterative solver missed its residual target within the restart cap.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double lastResidual)
      : std::runtime_error(what), lastResidual_(lastResidual) {}
  double lastResidual() const { return lastResidual_; }

private:
  double lastResidual_;
};

/// Full spectrum. Throws std::length_error above tol.denseCap.
SpectralReport denseSpectrum(const SymmetricOperator& op, const Tolerances& tol = {});

/// Extremal eigenvalues by thick-restart Lanczos with full reorthogonalization.
/// Residuals satisfy ||A v - lambda v|| <= tol * ||A||_inf or ConvergenceError is thrown.
SpectralReport extremalEigenvalues(const SymmetricOperator& op, Which which, double tol = 1e-8,
                                   const LanczosOptions& options = {});

/// Smallest and largest eigenvalue: dense up to tol.denseCap, iterative above.
SpectralReport extremalSpectrum(const SymmetricOperator& op, const Tolerances& tol = {});

struct Root {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

/// Spectrum of K_{k,n} from its characteristic polynomial: the roots of
/// l^2 - (n-1) l - nk, (n-1) with multiplicity k-1 and -1 with multiplicity
/// k(n-1). Entries with multiplicity 0 are dropped.
std::vector<Root> kknCharPolyRoots(std::size_t k, std::size_t n);
std::vector<double> expandRoots(std::span<const Root> roots);

struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string relation = "<=";
  /// rhs - lhs.
  double slack = 0.0;
  bool verdict = false;
};

/// lhs <= rhs up to absoluteSlack + relativeSlack * max(|lhs|, |rhs|).
BoundCheck lessEqual(std::string name, double lhs, double rhs, const Tolerances& tol = {});

struct SandwichCheck {
  /// sup_x sum_y E(x,y)^2 <= sup sigma(A^2).
  BoundCheck lower;
  /// sup sigma(A^2) <= sup_x sum_y d(y) E(x,y)^2.
  BoundCheck upper;
  double supSquared = 0.0;
};

SandwichCheck checkEstbdSandwich(const FiniteGraph& g, const Tolerances& tol = {});
SandwichCheck checkEstbdSandwich(const FiniteGraph& g, const SpectralReport& spectrum, const Tolerances& tol = {});

/// Rayleigh quotient of f = 1 at x, d(x)^{-1/2} on its neighbors:
/// (1/sqrt(d)) sum_y E(x,y) + (1/(2d)) sum_{y~x} sum_{z~y, z~x} E(y,z).
/// A lower bound on the top of the spectrum. Throws std::domain_error for isolated x.
double rayleighWitness(const FiniteGraph& g, VertexId x);

/// Per-vertex check of
///   (1/C) (sum_y E(x,y))^2 <= sum_{y~x} sum_{z~y, z~x} E(y,z) + C d(x)
/// on the induced subgraph on `subset` (all vertices when empty). C defaults
/// to max(absoluteSlack, -lambda_min(g)); C <= 0 is rejected.
std::vector<BoundCheck> checkDiscriminantInequality(const FiniteGraph& g, std::span<const VertexId> subset,
                                                    std::optional<double> c = std::nullopt,
                                                    const Tolerances& tol = {});

/// ||A_glued - A_disjoint|| <= M * wMax, the norm taken as the largest
/// |eigenvalue| of the difference. Throws std::invalid_argument on shape mismatch.
BoundCheck surgeryNormCheck(const FiniteGraph& glued, const FiniteGraph& disjoint, double rowBound, double maxWeight,
                            const Tolerances& tol = {});

struct ScanRow {
  std::size_t size = 0;
  double lambdaMin = 0.0;
  double lambdaMax = 0.0;
  Method method = Method::Dense;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  /// Up to tol.absoluteSlack.
  bool maxNondecreasing = true;
  bool minNonincreasing = true;
};

/// Extremal eigenvalues of nested truncations. Each row encloses
/// [lambdaMin, lambdaMax] inside the hull of the spectrum of any
/// self-adjoint extension. Sizes must be increasing.
ScanResult unboundednessScan(const GraphFamily& family, std::span<const std::size_t> sizes, const Tolerances& tol = {});

}  // namespace locfin

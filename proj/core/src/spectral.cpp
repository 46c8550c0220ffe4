#include "locfin/spectral.hpp"

#include "symmetric_eigen.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace locfin {

namespace {

Eigen::MatrixXd denseOf(const SymmetricOperator& op) {
  const auto n = static_cast<Eigen::Index>(op.dimension());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (const auto& e : op.row(static_cast<std::size_t>(i))) m(i, static_cast<Eigen::Index>(e.col)) = e.value;
  }
  return m;
}

}  // namespace

const char* toString(Method m) { return m == Method::Dense ? "dense" : "iter"; }

SymmetricOperator::SymmetricOperator(std::size_t dimension, std::vector<std::vector<Entry>> rows)
    : rows_(std::move(rows)) {
  if (rows_.size() != dimension) throw std::invalid_argument("operator row count does not match its dimension");
  for (auto& r : rows_) {
    std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    for (const auto& e : r) {
      if (e.col >= dimension) throw std::invalid_argument("operator entry outside its dimension");
      if (!std::isfinite(e.value)) throw std::invalid_argument("operator entry is not finite");
    }
  }
  for (std::size_t i = 0; i < dimension; ++i) {
    for (const auto& e : rows_[i]) {
      if (entry(e.col, i) != e.value) {
        throw std::invalid_argument("operator is not symmetric at (" + std::to_string(i) + ", " +
                                    std::to_string(e.col) + ")");
      }
    }
  }
}

double SymmetricOperator::entry(std::size_t i, std::size_t j) const {
  const auto& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
  return (it != r.end() && it->col == j) ? it->value : 0.0;
}

void SymmetricOperator::apply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != dimension() || y.size() != dimension()) throw std::invalid_argument("operator applied to a vector of the wrong size");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    double acc = 0.0;
    for (const auto& e : rows_[i]) acc += e.value * x[e.col];
    y[i] = acc;
  }
}

double SymmetricOperator::infNorm() const {
  double best = 0.0;
  for (const auto& r : rows_) {
    double sum = 0.0;
    for (const auto& e : r) sum += std::abs(e.value);
    best = std::max(best, sum);
  }
  return best;
}

std::vector<double> SymmetricOperator::toDense() const {
  const std::size_t n = dimension();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : rows_[i]) out[i * n + e.col] = e.value;
  }
  return out;
}

SymmetricOperator adjacencyMatrix(const FiniteGraph& g) {
  std::vector<std::vector<SymmetricOperator::Entry>> rows(g.vertexCount());
  for (VertexId x = 0; x < g.vertexCount(); ++x) {
    for (const auto& nb : g.neighbors(x)) rows[x].push_back({nb.id, nb.weight});
  }
  return SymmetricOperator(g.vertexCount(), std::move(rows));
}

SymmetricOperator laplacianMatrix(const FiniteGraph& g) {
  std::vector<std::vector<SymmetricOperator::Entry>> rows(g.vertexCount());
  for (VertexId x = 0; x < g.vertexCount(); ++x) {
    double diagonal = 0.0;
    for (const auto& nb : g.neighbors(x)) {
      rows[x].push_back({nb.id, -nb.weight});
      diagonal += nb.weight;
    }
    rows[x].push_back({x, diagonal});
  }
  return SymmetricOperator(g.vertexCount(), std::move(rows));
}

SymmetricOperator difference(const SymmetricOperator& a, const SymmetricOperator& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("operators of dimension " + std::to_string(a.dimension()) + " and " +
                                std::to_string(b.dimension()) + " cannot be subtracted");
  }
  std::vector<std::vector<SymmetricOperator::Entry>> rows(a.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    auto ra = a.row(i);
    auto rb = b.row(i);
    auto ia = ra.begin();
    auto ib = rb.begin();
    while (ia != ra.end() || ib != rb.end()) {
      std::size_t col;
      double value;
      if (ib == rb.end() || (ia != ra.end() && ia->col < ib->col)) {
        col = ia->col;
        value = ia->value;
        ++ia;
      } else if (ia == ra.end() || ib->col < ia->col) {
        col = ib->col;
        value = -ib->value;
        ++ib;
      } else {
        col = ia->col;
        value = ia->value - ib->value;
        ++ia;
        ++ib;
      }
      if (value != 0.0) rows[i].push_back({col, value});
    }
  }
  return SymmetricOperator(a.dimension(), std::move(rows));
}

SpectralReport denseSpectrum(const SymmetricOperator& op, const Tolerances& tol) {
  if (op.dimension() > tol.denseCap) {
    throw std::length_error("dimension " + std::to_string(op.dimension()) + " exceeds the dense cap " +
                            std::to_string(tol.denseCap) + "; use the iterative method");
  }
  SpectralReport report;
  report.full = true;
  report.method = Method::Dense;
  report.tolerance = tol.denseResidual;
  if (op.dimension() == 0) return report;

  const Eigen::MatrixXd a = denseOf(op);
  const auto solver = detail::symmetricEigen(a, true);
  const Eigen::MatrixXd residual = a * solver.vectors - solver.vectors * solver.values.asDiagonal();
  const double limit = tol.denseResidual * op.infNorm();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    report.eigenvalues.push_back(solver.values[i]);
    const double r = residual.col(i).norm();
    report.residualNorms.push_back(r);
    if (r > limit) {
      std::ostringstream msg;
      msg << "dense eigenpair " << i << " has residual " << r << " above " << limit;
      throw ConvergenceError(msg.str(), r);
    }
  }
  return report;
}

SpectralReport extremalSpectrum(const SymmetricOperator& op, const Tolerances& tol) {
  if (op.dimension() <= tol.denseCap) {
    auto full = denseSpectrum(op, tol);
    SpectralReport out;
    out.full = false;
    out.method = Method::Dense;
    out.tolerance = full.tolerance;
    if (full.eigenvalues.empty()) return out;
    out.eigenvalues = {full.eigenvalues.front(), full.eigenvalues.back()};
    out.residualNorms = {full.residualNorms.front(), full.residualNorms.back()};
    return out;
  }
  return extremalEigenvalues(op, Which::Both, tol.iterativeResidual);
}

std::vector<Root> kknCharPolyRoots(std::size_t k, std::size_t n) {
  if (k < 1 || n < 1) throw std::invalid_argument("K_{k,n} needs k >= 1 and n >= 1");
  const double b = static_cast<double>(n) - 1.0;
  const double c = static_cast<double>(n) * static_cast<double>(k);
  const double disc = std::sqrt(b * b + 4.0 * c);
  std::vector<Root> roots = {{(b - disc) / 2.0, 1}, {(b + disc) / 2.0, 1}};
  if (k > 1) roots.push_back({b, k - 1});
  if (n > 1) roots.push_back({-1.0, k * (n - 1)});
  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) { return x.value < y.value; });
  return roots;
}

std::vector<double> expandRoots(std::span<const Root> roots) {
  std::vector<double> out;
  for (const auto& r : roots) out.insert(out.end(), r.multiplicity, r.value);
  std::sort(out.begin(), out.end());
  return out;
}

BoundCheck lessEqual(std::string name, double lhs, double rhs, const Tolerances& tol) {
  BoundCheck check;
  check.name = std::move(name);
  check.lhs = lhs;
  check.rhs = rhs;
  check.slack = rhs - lhs;
  const double allowance = tol.absoluteSlack + tol.relativeSlack * std::max(std::abs(lhs), std::abs(rhs));
  check.verdict = check.slack >= -allowance;
  return check;
}

SandwichCheck checkEstbdSandwich(const FiniteGraph& g, const Tolerances& tol) {
  if (g.vertexCount() < 2) {
    SpectralReport zero;
    zero.eigenvalues = {0.0, 0.0};
    return checkEstbdSandwich(g, zero, tol);
  }
  return checkEstbdSandwich(g, extremalSpectrum(adjacencyMatrix(g), tol), tol);
}

SandwichCheck checkEstbdSandwich(const FiniteGraph& g, const SpectralReport& spectrum, const Tolerances& tol) {
  double lower = 0.0;
  double upper = 0.0;
  for (VertexId x = 0; x < g.vertexCount(); ++x) {
    double squares = 0.0;
    double weighted = 0.0;
    for (const auto& y : g.neighbors(x)) {
      squares += y.weight * y.weight;
      weighted += static_cast<double>(g.degree(y.id)) * y.weight * y.weight;
    }
    lower = std::max(lower, squares);
    upper = std::max(upper, weighted);
  }
  SandwichCheck out;
  out.supSquared = std::max(spectrum.min() * spectrum.min(), spectrum.max() * spectrum.max());
  out.lower = lessEqual("sup_x sum_y E^2 <= sup sigma(A^2)", lower, out.supSquared, tol);
  out.upper = lessEqual("sup sigma(A^2) <= sup_x sum_y d(y) E^2", out.supSquared, upper, tol);
  return out;
}

double rayleighWitness(const FiniteGraph& g, VertexId x) {
  const auto d = static_cast<double>(g.degree(x));
  if (d == 0.0) throw std::domain_error("Rayleigh witness needs a vertex with at least one neighbor");
  double weights = 0.0;
  for (const auto& y : g.neighbors(x)) weights += y.weight;
  return weights / std::sqrt(d) + g.weightedTriangleSum(x) / (2.0 * d);
}

std::vector<BoundCheck> checkDiscriminantInequality(const FiniteGraph& g, std::span<const VertexId> subset,
                                                    std::optional<double> c, const Tolerances& tol) {
  if (!c) {
    const double lambdaMin = g.vertexCount() >= 2 ? extremalSpectrum(adjacencyMatrix(g), tol).min() : 0.0;
    c = std::max(tol.absoluteSlack, -lambdaMin);
  }
  if (!(*c > 0.0)) throw std::invalid_argument("discriminant check needs C > 0");

  std::vector<VertexId> all;
  if (subset.empty()) {
    all.resize(g.vertexCount());
    for (VertexId x = 0; x < all.size(); ++x) all[x] = x;
    subset = all;
  }
  const auto sub = inducedSubgraph(g, subset);
  std::vector<BoundCheck> checks;
  for (VertexId x = 0; x < sub.graph.vertexCount(); ++x) {
    double weights = 0.0;
    for (const auto& y : sub.graph.neighbors(x)) weights += y.weight;
    const double lhs = weights * weights / *c;
    const double rhs = sub.graph.weightedTriangleSum(x) + *c * static_cast<double>(sub.graph.degree(x));
    checks.push_back(lessEqual("vertex " + std::to_string(sub.originalOf[x]), lhs, rhs, tol));
  }
  return checks;
}

BoundCheck surgeryNormCheck(const FiniteGraph& glued, const FiniteGraph& disjoint, double rowBound, double maxWeight,
                            const Tolerances& tol) {
  if (glued.vertexCount() != disjoint.vertexCount()) {
    throw std::invalid_argument("surgery graphs have " + std::to_string(glued.vertexCount()) + " and " +
                                std::to_string(disjoint.vertexCount()) + " vertices");
  }
  const auto diff = difference(adjacencyMatrix(glued), adjacencyMatrix(disjoint));

  // The difference lives on the anchors; its norm is that of the compressed block.
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < diff.dimension(); ++i) {
    if (!diff.row(i).empty()) support.push_back(i);
  }
  double norm = 0.0;
  if (!support.empty()) {
    const auto m = static_cast<Eigen::Index>(support.size());
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index a = 0; a < m; ++a) {
      for (Eigen::Index b = 0; b < m; ++b) block(a, b) = diff.entry(support[a], support[b]);
    }
    norm = detail::symmetricEigen(block, false).values.cwiseAbs().maxCoeff();
  }
  return lessEqual("||A_G - A_G0|| <= M * w_max", norm, rowBound * maxWeight, tol);
}

ScanResult unboundednessScan(const GraphFamily& family, std::span<const std::size_t> sizes, const Tolerances& tol) {
  ScanResult result;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i > 0 && sizes[i] <= sizes[i - 1]) throw std::invalid_argument("scan sizes must be increasing");
    const auto t = truncate(family, sizes[i]);
    ScanRow row;
    row.size = sizes[i];
    if (sizes[i] == 1) {
      row.lambdaMin = row.lambdaMax = 0.0;
    } else {
      const auto spectrum = extremalSpectrum(adjacencyMatrix(t.graph), tol);
      row.lambdaMin = spectrum.min();
      row.lambdaMax = spectrum.max();
      row.method = spectrum.method;
    }
    if (!result.rows.empty()) {
      const auto& prev = result.rows.back();
      if (!lessEqual("", prev.lambdaMax, row.lambdaMax, tol).verdict) result.maxNondecreasing = false;
      if (!lessEqual("", row.lambdaMin, prev.lambdaMin, tol).verdict) result.minNonincreasing = false;
    }
    result.rows.push_back(row);
  }
  return result;
}

}  // namespace locfin

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "locfin/family.hpp"

namespace locfin {

using Complex = std::complex<double>;

/// Least-squares fit of log|f(n)|^2 against log n.
struct TailFit {
  double exponent = 0.0;
  /// 95% interval for the exponent.
  double low = 0.0;
  double high = 0.0;
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t points = 0;
};

/**
   Candidate solution of A* f = i f on a finite window.

   values[i] is f at window vertex i. residuals[i] is set on the vertices
   where the equation involves only window vertices. partialL2[N] is
   sum_{i <= N} |f(i)|^2.
 */
struct DeficiencySolution {
  std::vector<Complex> values;
  std::vector<std::optional<double>> residuals;
  std::vector<double> partialL2;
  TailFit tailDiagnostic;
  /// Values and residuals come from exact rational arithmetic.
  bool exact = false;
  /// First N beyond which every increment |f(n)|^2 is below cauchyThreshold.
  std::optional<std::size_t> cauchyIndex;
  double cauchyThreshold = 1e-12;

  double maxResidual() const;
  double maxAbs() const;
};

/// The F-tree solution constant on every children interval [F(n), F(n+1)):
/// c_0 = i f(0) / d(0) and c_n = (i f(n) - f(n')) / (d(n) - 1) for n >= 1,
/// on vertices 0..window. Exact when window <= exactLimit and the rationals
/// fit in 128 bits, floating point otherwise.
DeficiencySolution fTreeDeficiencyVector(double alpha, std::size_t window, Complex f0,
                                         std::size_t exactLimit = 100000);

/// Forward solution of a_{n-1} f(n-1) + a_n f(n+1) = i f(n), a_n = n^(1+alpha),
/// from f(1) on n = 1..length (values[i] = f(i+1)). Uses the scaled form
/// f(n+1) = i f(n) / a_n - (a_{n-1} / a_n) f(n-1) so no weight is formed.
DeficiencySolution jacobiDeficiencyVector(double alpha, std::size_t length, Complex f1);

/// max over interior x of |sum_{y~x} E(x,y) f(y) - i f(x)|.
/// Throws std::invalid_argument when the solution and window sizes differ.
double deficiencyResidualCheck(const DeficiencySolution& sol, const Truncation& t);

struct NelsonWindow {
  std::size_t window = 0;
  std::size_t interiorCount = 0;
  /// max over interior x, y~x of |d(x) - d(y)|.
  double supDegreeGap = 0.0;
  /// max over interior x, y~x of |E(x) - E(y)|, E(x) = max_{y~x} E(x,y).
  double supWeightGap = 0.0;
  VertexId degreeArgmax = 0;
  VertexId weightArgmax = 0;
};

struct NelsonHypothesisReport {
  std::vector<NelsonWindow> windows;
  /// The sup did not change over the last two windows.
  bool degreeBounded = false;
  bool weightBounded = false;
  /// log-log slope of the sup against the window size, first to last window.
  double degreeGrowthRate = 0.0;
  double weightGrowthRate = 0.0;
};

NelsonHypothesisReport nelsonHypothesisCheck(const GraphFamily& family, std::span<const std::size_t> windows);

/// n^-exponent |d(n) - d(n+1)| for each n, from the family's degrees.
std::vector<double> scaledDegreeGaps(const GraphFamily& family, std::span<const VertexId> ns, double exponent);

/// n^-exponent |E(n) - E(n+1)| for each n. For chains whose ids start at
/// label 1 pass labelOffset = 1 so that n is the label, not the id.
std::vector<double> scaledWeightGaps(const GraphFamily& family, std::span<const VertexId> ns, double exponent,
                                     std::size_t labelOffset = 0);

}  // namespace locfin

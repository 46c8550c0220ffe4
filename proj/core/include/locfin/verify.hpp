#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "locfin/spectral.hpp"

namespace locfin {

struct VerifyConfig {
  /// Seeds the random graph and random surgery suites.
  std::uint64_t seed = 20240611;
  std::size_t randomGraphs = 200;
  std::size_t surgeryPlans = 50;
  Tolerances tol;
  /// Criterion ids to run; empty runs all.
  std::set<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string description;
  /// The claim being checked, quoted.
  std::string anchor;
  std::string measured;
  std::string expected;
  double tolerance = 0.0;
  bool passed = false;
  /// Set when the criterion fails or needs a remark (e.g. discrepant published values).
  std::string diagnostic;
  /// The failure came from a solver that did not converge.
  bool nonConvergence = false;
  double seconds = 0.0;
};

struct VerifySuiteResult {
  std::vector<CriterionResult> criteria;
  bool allPassed = false;
  bool anyNonConvergence = false;
  std::uint64_t seed = 0;
  std::string configHash;
};

constexpr int kCriterionCount = 14;

/// Runs the acceptance criteria. Failures, including solver non-convergence,
/// are reported in the result rather than thrown.
VerifySuiteResult runVerifySuite(const VerifyConfig& config = {});

/// Runs one criterion (1..kCriterionCount).
CriterionResult runCriterion(int id, const VerifyConfig& config);

std::string canonicalConfig(const VerifyConfig& config);
std::string verifyReportJson(const VerifySuiteResult& result);
/// One line per criterion, then an overall line.
std::string verifyReportTable(const VerifySuiteResult& result);

/// Ordered pairs (y, z) of adjacent common neighbors of x by direct
/// enumeration of all vertex pairs. Quadratic in the vertex count.
std::uint64_t bruteForceTriangles(const FiniteGraph& g, VertexId x);

/// Graphs from every generator, used by the witness and Laplacian criteria.
std::vector<FiniteGraph> generatedTestGraphs();

}  // namespace locfin

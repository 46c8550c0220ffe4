#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "locfin/family.hpp"
#include "locfin/graph.hpp"

namespace locfin {

/// N(x) / d(x)^2 with N the oriented triangle count. Throws std::domain_error
/// for isolated vertices.
double ratio(const FiniteGraph& g, VertexId x);

struct VertexRatio {
  VertexId vertex = 0;
  std::size_t degree = 0;
  std::uint64_t triangles = 0;
  double ratio = 0.0;
};

struct ThresholdInfimum {
  std::size_t threshold = 0;
  /// Empty when no counted vertex has degree >= threshold.
  std::optional<double> infRatio;
  std::size_t vertexCount = 0;
};

/**
   Ratio statistics of one window. The liminf of N(x)/d(x)^2 along the
   filter of vertices with d(x) >= t is approximated by the infimum over
   counted vertices of degree >= t, for a sweep of thresholds t.

   The window estimate is the infimum at the largest swept threshold not
   above half the maximal counted degree, so that each estimate is still
   an infimum over a degree band rather than a single vertex.
 */
struct ComplexityReport {
  std::size_t windowSize = 0;
  bool interiorOnly = true;
  std::vector<VertexRatio> perVertex;
  std::vector<ThresholdInfimum> thresholdInfima;
  std::optional<double> estimate;
  std::size_t estimateThreshold = 0;
  std::size_t maxDegree = 0;
};

/// Thresholds default to the distinct degrees of the counted vertices.
ComplexityReport complexityReport(const Truncation& t, std::span<const std::size_t> thresholds = {},
                                  bool interiorOnly = true);

struct ComplexityEstimate {
  std::vector<ComplexityReport> windows;
  /// Estimate of the largest window.
  std::optional<double> estimate;
  /// |estimate(w_i) - estimate(w_{i-1})| for consecutive windows with estimates.
  std::vector<double> increments;
  /// The maximal interior degree grew across the windows.
  bool degreeGrows = false;
};

ComplexityEstimate cLocEstimate(const GraphFamily& family, std::span<const std::size_t> windows,
                                std::span<const std::size_t> thresholds = {});

/// Induced star through `center`: pairwise non-adjacent neighbors of center.
struct StarWitness {
  VertexId center = 0;
  std::vector<VertexId> leaves;
  /// leaves.size() + 1.
  std::size_t order = 1;
  /// True when leaves is a maximum independent set of the neighborhood.
  bool exact = false;
};

/// Largest independent set among the neighbors of x: exact branch and bound
/// when d(x) <= exactCap, otherwise greedy with 1-for-2 swap improvement.
StarWitness starOrderAt(const FiniteGraph& g, VertexId x, std::size_t exactCap = 20);

enum class SubComplexityVerdict { ZeroWitness, NoWitnessFound, BoundedStars };

const char* toString(SubComplexityVerdict v);

struct SubComplexityResult {
  SubComplexityVerdict verdict = SubComplexityVerdict::NoWitnessFound;
  std::vector<std::size_t> windows;
  /// Best star found in each window (largest order among the candidates).
  std::vector<StarWitness> witnesses;
  std::size_t maxOrder = 0;
};

/**
   Star witnesses for a vanishing sub-lower local complexity. In each window
   the `candidates` interior vertices of largest degree are searched for
   induced stars. Orders strictly increasing over the windows give
   ZeroWitness; identical orders give BoundedStars (inconclusive for
   positivity); anything else is NoWitnessFound.
 */
SubComplexityResult subComplexityWitness(const GraphFamily& family, std::span<const std::size_t> windows,
                                         std::size_t candidates = 8, std::size_t exactCap = 20);

}  // namespace locfin

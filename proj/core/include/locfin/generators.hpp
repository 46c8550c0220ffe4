#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "locfin/family.hpp"
#include "locfin/graph.hpp"

namespace locfin {

// Every generator validates its parameters (std::invalid_argument) and uses
// weight 1 unless stated otherwise. Canonical orders are hub-first for
// star/hub families, level order for trees and index order for chains.

/// K_n. Order: vertex id.
GraphFamily completeGraph(std::size_t n);

/// S_n: n vertices, hub 0 joined to leaves 1..n-1.
GraphFamily starGraph(std::size_t n);

/// K_{k,n}: hub 0 joined to every vertex of k disjoint copies of K_n.
/// Copy c occupies ids 1 + c*n .. (c+1)*n.
GraphFamily hubOfCliques(std::size_t k, std::size_t n);

/// Union over blocks b >= 1 of S_{alpha*b+1}K_b with consecutive hubs joined.
/// Block b is laid out hub first, then alpha*b star leaves, then the b
/// vertices of its clique; blocks follow each other in increasing b.
GraphFamily chainedStarCliques(std::size_t alpha);

/// Id of the hub x_b in chainedStarCliques(alpha).
VertexId chainedStarHub(std::size_t alpha, std::size_t block);

/// Number of vertices in blocks 1..block.
std::size_t chainedStarPrefixSize(std::size_t alpha, std::size_t block);

/// Word tree with increment M: a word of length K takes its j-th letter from
/// an alphabet of j*M symbols, and words are joined to their one-letter
/// extensions. The family is the infinite tree; its vertex budget stops at
/// words of length maxLen. Order: by length, then lexicographic.
GraphFamily wordTree(std::size_t increment, std::size_t maxLen);

/// Number of words of length <= maxLen. Throws std::overflow_error if it
/// does not fit in 64 bits.
std::uint64_t wordTreeVertexCount(std::size_t increment, std::size_t maxLen);

/// Tree on the non-negative integers where the children of n are the
/// integers in [F(n), F(n+1)), F(x) = (x+1)^(alpha+2).
class FTreeShape {
public:
  explicit FTreeShape(double alpha);

  double alpha() const { return alpha_; }
  /// F evaluated in long double.
  long double growth(long double x) const;
  /// First integer >= F(n).
  std::uint64_t childrenBegin(std::uint64_t n) const;
  std::uint64_t childrenEnd(std::uint64_t n) const { return childrenBegin(n + 1); }
  std::uint64_t childCount(std::uint64_t n) const { return childrenEnd(n) - childrenBegin(n); }
  /// Unique neighbor n' < n, for n >= 1.
  std::uint64_t parentOf(std::uint64_t n) const;
  /// Degree in the tree (children plus parent).
  std::uint64_t treeDegree(std::uint64_t n) const { return childCount(n) + (n >= 1 ? 1 : 0); }

private:
  double alpha_;
  int integerExponent_;
};

/// Window 0..maxVertex of the F-tree. With `connected`, chain edges n~n+1 are
/// added for n >= 1; vertex 0 keeps only its tree edges.
GraphFamily fTree(double alpha, std::size_t maxVertex, bool connected = false);

/// Path on 1..length (ids 0..length-1) with E(n, n+1) = n^(1+alpha).
/// The family is the half-infinite chain with a vertex budget of `length`.
GraphFamily jacobiChain(double alpha, std::size_t length);

/// Disjoint union of the stars S_2, S_3, ..., hub first within each star.
GraphFamily disjointStars();

/// Id of the hub of S_order in disjointStars().
VertexId disjointStarHub(std::size_t order);

struct SurgeryPart {
  GraphFamily family;
  VertexId anchor = 0;
};

struct CrossEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  double weight = 1.0;
};

struct SurgeryPlan {
  std::vector<SurgeryPart> parts;
  std::vector<CrossEdge> crossEdges;
  /// Bound M on every anchor row sum of cross weights.
  double rowBound = 1.0;
};

struct SurgeryResult {
  /// Parts joined by the anchor cross edges.
  FiniteGraph glued;
  /// Disjoint union of the parts.
  FiniteGraph disjoint;
  /// First vertex id of each part in both graphs.
  std::vector<std::size_t> partOffsets;
  std::vector<VertexId> anchors;
  double maxCrossWeight = 0.0;
};

/// Truncates each part to at most sizeCap vertices and glues the parts along
/// the cross edges. Throws std::invalid_argument when an anchor row sum
/// exceeds rowBound, naming the part.
SurgeryResult surgery(const SurgeryPlan& plan, std::size_t sizeCap);

/// Parts K_{k,1}, ..., K_{k,parts} anchored at their hubs, consecutive hubs
/// joined with weight 1, row bound 2.
SurgeryPlan hubChainPlan(std::size_t k, std::size_t parts);

}  // namespace locfin

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace locfin {

using VertexId = std::size_t;

/// Undirected weighted edge. Stored with u <= v; u == v only in invalid graphs.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  VertexId id = 0;
  double weight = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Weights below this are rejected by validate() rather than treated as zero.
inline constexpr double kMinEdgeWeight = 1e-12;

/**
   Finite symmetric weighted graph on vertices 0..n-1.

   Each undirected edge is stored once (u < v) together with a per-vertex
   sorted adjacency index, so E(x,y) = E(y,x) holds by construction.
   Instances are immutable once built.

   The constructor only requires endpoints to be in range. Loops,
   non-positive weights and duplicate pairs are kept as given so that
   validate() can report them; generators never produce them.
 */
class FiniteGraph {
public:
  FiniteGraph() = default;
  FiniteGraph(std::size_t vertexCount, std::vector<Edge> edges,
              std::vector<std::string> labels = {});

  std::size_t vertexCount() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edgeCount() const { return edges_.size(); }

  /// Edges sorted by (u, v), u <= v.
  std::span<const Edge> edges() const { return edges_; }

  /// Empty when the graph carries no labels.
  std::span<const std::string> labels() const { return labels_; }
  std::string label(VertexId x) const;

  /// Neighbors of x sorted by id. Throws std::domain_error when x is out of range.
  std::span<const Neighbor> neighbors(VertexId x) const;

  std::size_t degree(VertexId x) const { return neighbors(x).size(); }

  /// E(x, y); zero when the pair is not adjacent.
  double weight(VertexId x, VertexId y) const;
  bool adjacent(VertexId x, VertexId y) const { return weight(x, y) != 0.0; }

  /// Number of ordered pairs (y, z), y != z, with x~y, x~z and y~z.
  /// Each unordered triangle through x is counted twice.
  std::uint64_t triangleCount(VertexId x) const;

  /// Sum over y~x, z~y, z~x of E(y, z), ordered pairs.
  double weightedTriangleSum(VertexId x) const;

  std::size_t maxDegree() const;

  friend bool operator==(const FiniteGraph& a, const FiniteGraph& b) {
    return a.edges_ == b.edges_ && a.offsets_ == b.offsets_ && a.labels_ == b.labels_;
  }

private:
  void checkVertex(VertexId x) const;

  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<std::string> labels_;
};

struct InducedSubgraph {
  FiniteGraph graph;
  /// originalOf[i] is the vertex of the source graph that became vertex i.
  std::vector<VertexId> originalOf;
};

/// Restriction of g to `keep`: vertices are removed, edges between kept
/// vertices are retained with their weights. `keep` is sorted and
/// deduplicated; new ids follow increasing original id.
InducedSubgraph inducedSubgraph(const FiniteGraph& g, std::span<const VertexId> keep);

struct Violation {
  enum class Kind { Loop, NonPositiveWeight, DuplicateEdge, IndexMismatch, LabelCount };
  Kind kind;
  VertexId u = 0;
  VertexId v = 0;
  std::string message;
};

/// Empty iff the graph has no loops, only weights >= kMinEdgeWeight, no
/// duplicate pairs, and an adjacency index consistent with its edge list.
std::vector<Violation> validate(const FiniteGraph& g);

std::vector<std::size_t> degreeSequence(const FiniteGraph& g);

}  // namespace locfin

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locfin/graph.hpp"

namespace locfin {

/**
   Lazy description of a locally finite, possibly infinite graph.

   Vertex ids are positions in the family's canonical order, so the
   truncation of order n is always the induced subgraph on ids 0..n-1.
   Each generator documents its canonical order.

   The neighbor function is queried with an upper bound so that families
   whose vertices have huge (but finite) neighborhoods can answer window
   queries without materializing them. All callbacks must be pure.
 */
class GraphFamily {
public:
  /// Neighbors y of x with y < bound, sorted by id.
  using NeighborsBelowFn = std::function<std::vector<Neighbor>(VertexId x, VertexId bound)>;
  using DegreeFn = std::function<std::size_t(VertexId)>;
  using WeightFn = std::function<double(VertexId)>;
  using LabelFn = std::function<std::string(VertexId)>;

  struct Definition {
    std::string name;
    std::map<std::string, double> params;
    /// Vertex count of a finite graph; empty for infinite families.
    std::optional<std::size_t> size;
    /// Largest window that may be requested. Defaults to size for finite families.
    std::optional<std::size_t> budget;
    std::string order;
    NeighborsBelowFn neighborsBelow;
    /// Optional closed form; defaults to counting neighborsBelow(x, max).
    DegreeFn degree;
    /// Optional closed form of max_{y~x} E(x,y); defaults to scanning neighbors.
    WeightFn maxIncidentWeight;
    LabelFn label;
  };

  explicit GraphFamily(Definition def);

  /// Finite family holding an explicit graph (canonical order = vertex ids).
  static GraphFamily fromGraph(FiniteGraph g, std::string name = "graph");

  const std::string& name() const { return def_.name; }
  const std::map<std::string, double>& params() const { return def_.params; }
  double param(const std::string& key) const;
  const std::string& orderDescription() const { return def_.order; }

  bool isFinite() const { return def_.size.has_value(); }
  std::optional<std::size_t> size() const { return def_.size; }
  std::optional<std::size_t> budget() const { return def_.budget; }

  std::vector<Neighbor> neighbors(VertexId x) const;
  std::vector<Neighbor> neighborsBelow(VertexId x, VertexId bound) const;
  std::size_t degree(VertexId x) const;
  double maxIncidentWeight(VertexId x) const;
  std::string label(VertexId x) const;

private:
  void checkVertex(VertexId x) const;

  Definition def_;
};

/// Finite window onto a family: induced subgraph on the first `order` vertices.
struct Truncation {
  GraphFamily source;
  std::size_t order = 0;
  FiniteGraph graph;
  /// interior[x] iff every family neighbor of x lies inside the window.
  std::vector<bool> interior;

  std::size_t interiorCount() const;
};

/// Throws std::domain_error for n == 0 or n beyond the family's size or budget.
Truncation truncate(const GraphFamily& family, std::size_t n);

/// Symmetry of the neighbor function on the window 0..n-1: every reported
/// pair inside the window must be reported from both ends with equal weight.
/// Returns one message per asymmetric pair.
std::vector<std::string> checkSymmetry(const GraphFamily& family, std::size_t n);

}  // namespace locfin

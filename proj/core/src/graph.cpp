#include "locfin/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace locfin {

namespace {

void buildIndex(std::size_t n, std::span<const Edge> edges, std::vector<std::size_t>& offsets,
                std::vector<Neighbor>& adjacency) {
  offsets.assign(n + 1, 0);
  for (const auto& e : edges) {
    ++offsets[e.u + 1];
    if (e.v != e.u) ++offsets[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];

  adjacency.assign(offsets[n], Neighbor{});
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const auto& e : edges) {
    adjacency[fill[e.u]++] = {e.v, e.weight};
    if (e.v != e.u) adjacency[fill[e.v]++] = {e.u, e.weight};
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
              adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[i + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
  }
}

// Number of common ids in two sorted neighbor lists, skipping the two excluded ids.
std::uint64_t countCommon(std::span<const Neighbor> a, std::span<const Neighbor> b, VertexId skip1,
                          VertexId skip2) {
  std::uint64_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->id < ib->id) {
      ++ia;
    } else if (ib->id < ia->id) {
      ++ib;
    } else {
      if (ia->id != skip1 && ia->id != skip2) ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

FiniteGraph::FiniteGraph(std::size_t vertexCount, std::vector<Edge> edges,
                         std::vector<std::string> labels)
    : edges_(std::move(edges)), labels_(std::move(labels)) {
  for (auto& e : edges_) {
    if (e.u >= vertexCount || e.v >= vertexCount) {
      throw std::domain_error("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              ") references a vertex outside 0.." +
                              std::to_string(vertexCount == 0 ? 0 : vertexCount - 1));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  buildIndex(vertexCount, edges_, offsets_, adjacency_);
}

void FiniteGraph::checkVertex(VertexId x) const {
  if (x >= vertexCount()) {
    throw std::domain_error("vertex " + std::to_string(x) + " out of range for graph with " +
                            std::to_string(vertexCount()) + " vertices");
  }
}

std::string FiniteGraph::label(VertexId x) const {
  checkVertex(x);
  return x < labels_.size() ? labels_[x] : std::to_string(x);
}

std::span<const Neighbor> FiniteGraph::neighbors(VertexId x) const {
  checkVertex(x);
  return std::span<const Neighbor>(adjacency_).subspan(offsets_[x], offsets_[x + 1] - offsets_[x]);
}

double FiniteGraph::weight(VertexId x, VertexId y) const {
  checkVertex(y);
  auto nb = neighbors(x);
  auto it = std::lower_bound(nb.begin(), nb.end(), y,
                             [](const Neighbor& a, VertexId id) { return a.id < id; });
  return (it != nb.end() && it->id == y) ? it->weight : 0.0;
}

std::uint64_t FiniteGraph::triangleCount(VertexId x) const {
  auto nx = neighbors(x);
  std::uint64_t count = 0;
  for (const auto& y : nx) {
    if (y.id == x) continue;
    count += countCommon(nx, neighbors(y.id), x, y.id);
  }
  return count;
}

double FiniteGraph::weightedTriangleSum(VertexId x) const {
  auto nx = neighbors(x);
  double sum = 0.0;
  for (const auto& y : nx) {
    if (y.id == x) continue;
    auto ny = neighbors(y.id);
    auto ia = nx.begin();
    auto ib = ny.begin();
    while (ia != nx.end() && ib != ny.end()) {
      if (ia->id < ib->id) {
        ++ia;
      } else if (ib->id < ia->id) {
        ++ib;
      } else {
        if (ia->id != x && ia->id != y.id) sum += ib->weight;
        ++ia;
        ++ib;
      }
    }
  }
  return sum;
}

std::size_t FiniteGraph::maxDegree() const {
  std::size_t best = 0;
  for (std::size_t x = 0; x < vertexCount(); ++x) best = std::max(best, offsets_[x + 1] - offsets_[x]);
  return best;
}

InducedSubgraph inducedSubgraph(const FiniteGraph& g, std::span<const VertexId> keep) {
  std::vector<VertexId> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (!kept.empty() && kept.back() >= g.vertexCount()) {
    throw std::domain_error("induced subgraph keeps vertex " + std::to_string(kept.back()) +
                            " which is not in the graph");
  }

  constexpr auto kDropped = static_cast<VertexId>(-1);
  std::vector<VertexId> newId(g.vertexCount(), kDropped);
  for (std::size_t i = 0; i < kept.size(); ++i) newId[kept[i]] = i;

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (newId[e.u] != kDropped && newId[e.v] != kDropped) {
      edges.push_back({newId[e.u], newId[e.v], e.weight});
    }
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels.reserve(kept.size());
    for (auto v : kept) labels.push_back(g.label(v));
  }
  return {FiniteGraph(kept.size(), std::move(edges), std::move(labels)), std::move(kept)};
}

std::vector<Violation> validate(const FiniteGraph& g) {
  std::vector<Violation> out;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.u == e.v) {
      out.push_back({Violation::Kind::Loop, e.u, e.v, "loop edge at vertex " + std::to_string(e.u)});
    }
    if (!(e.weight >= kMinEdgeWeight)) {
      out.push_back({Violation::Kind::NonPositiveWeight, e.u, e.v,
                     "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") has weight " +
                         std::to_string(e.weight) + " below " + std::to_string(kMinEdgeWeight)});
    }
    if (i > 0 && edges[i - 1].u == e.u && edges[i - 1].v == e.v) {
      out.push_back({Violation::Kind::DuplicateEdge, e.u, e.v,
                     "duplicate edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")"});
    }
  }

  std::vector<std::size_t> offsets;
  std::vector<Neighbor> adjacency;
  buildIndex(g.vertexCount(), edges, offsets, adjacency);
  for (std::size_t x = 0; x < g.vertexCount(); ++x) {
    auto stored = g.neighbors(x);
    auto rebuilt = std::span<const Neighbor>(adjacency).subspan(offsets[x], offsets[x + 1] - offsets[x]);
    if (!std::equal(stored.begin(), stored.end(), rebuilt.begin(), rebuilt.end())) {
      out.push_back({Violation::Kind::IndexMismatch, x, x,
                     "adjacency index of vertex " + std::to_string(x) + " disagrees with edge list"});
    }
  }
  if (!g.labels().empty() && g.labels().size() != g.vertexCount()) {
    out.push_back({Violation::Kind::LabelCount, 0, 0,
                   std::to_string(g.labels().size()) + " labels for " +
                       std::to_string(g.vertexCount()) + " vertices"});
  }
  return out;
}

std::vector<std::size_t> degreeSequence(const FiniteGraph& g) {
  std::vector<std::size_t> seq(g.vertexCount());
  for (std::size_t x = 0; x < seq.size(); ++x) seq[x] = g.degree(x);
  std::sort(seq.begin(), seq.end());
  return seq;
}

}  // namespace locfin

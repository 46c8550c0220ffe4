#include "locfin/family.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <stdexcept>

namespace locfin {

namespace {
constexpr VertexId kNoBound = std::numeric_limits<VertexId>::max();
}

GraphFamily::GraphFamily(Definition def) : def_(std::move(def)) {
  if (!def_.neighborsBelow) throw std::invalid_argument("family '" + def_.name + "' has no neighbor function");
  if (def_.size && !def_.budget) def_.budget = def_.size;
  if (def_.size && def_.budget && *def_.budget > *def_.size) def_.budget = def_.size;
}

GraphFamily GraphFamily::fromGraph(FiniteGraph g, std::string name) {
  auto shared = std::make_shared<const FiniteGraph>(std::move(g));
  Definition def;
  def.name = std::move(name);
  def.size = shared->vertexCount();
  def.order = "vertex id";
  def.neighborsBelow = [shared](VertexId x, VertexId bound) {
    std::vector<Neighbor> out;
    for (const auto& nb : shared->neighbors(x)) {
      if (nb.id >= bound) break;
      out.push_back(nb);
    }
    return out;
  };
  def.degree = [shared](VertexId x) { return shared->degree(x); };
  def.label = [shared](VertexId x) { return shared->label(x); };
  def.params["n"] = static_cast<double>(shared->vertexCount());
  return GraphFamily(std::move(def));
}

double GraphFamily::param(const std::string& key) const {
  auto it = def_.params.find(key);
  if (it == def_.params.end()) throw std::out_of_range("family '" + def_.name + "' has no parameter '" + key + "'");
  return it->second;
}

void GraphFamily::checkVertex(VertexId x) const {
  if (def_.size && x >= *def_.size) {
    throw std::domain_error("vertex " + std::to_string(x) + " outside finite family '" + def_.name + "' of size " +
                            std::to_string(*def_.size));
  }
}

std::vector<Neighbor> GraphFamily::neighbors(VertexId x) const { return neighborsBelow(x, kNoBound); }

std::vector<Neighbor> GraphFamily::neighborsBelow(VertexId x, VertexId bound) const {
  checkVertex(x);
  return def_.neighborsBelow(x, bound);
}

std::size_t GraphFamily::degree(VertexId x) const {
  checkVertex(x);
  return def_.degree ? def_.degree(x) : def_.neighborsBelow(x, kNoBound).size();
}

double GraphFamily::maxIncidentWeight(VertexId x) const {
  checkVertex(x);
  if (def_.maxIncidentWeight) return def_.maxIncidentWeight(x);
  double best = 0.0;
  for (const auto& nb : def_.neighborsBelow(x, kNoBound)) best = std::max(best, nb.weight);
  return best;
}

std::string GraphFamily::label(VertexId x) const {
  checkVertex(x);
  return def_.label ? def_.label(x) : std::to_string(x);
}

std::size_t Truncation::interiorCount() const {
  return static_cast<std::size_t>(std::count(interior.begin(), interior.end(), true));
}

Truncation truncate(const GraphFamily& family, std::size_t n) {
  if (n == 0) throw std::domain_error("truncation order must be at least 1");
  if (family.budget() && n > *family.budget()) {
    throw std::domain_error("truncation order " + std::to_string(n) + " exceeds the " +
                            (family.isFinite() ? "size" : "vertex budget") + " " +
                            std::to_string(*family.budget()) + " of family '" + family.name() + "'");
  }

  std::vector<Edge> edges;
  std::vector<bool> interior(n);
  std::vector<std::string> labels(n);
  for (VertexId x = 0; x < n; ++x) {
    auto nb = family.neighborsBelow(x, n);
    for (const auto& y : nb) {
      if (y.id > x) edges.push_back({x, y.id, y.weight});
    }
    interior[x] = nb.size() == family.degree(x);
    labels[x] = family.label(x);
  }
  FiniteGraph graph(n, std::move(edges), std::move(labels));
  return Truncation{family, n, std::move(graph), std::move(interior)};
}

std::vector<std::string> checkSymmetry(const GraphFamily& family, std::size_t n) {
  std::vector<std::string> problems;
  for (VertexId x = 0; x < n; ++x) {
    for (const auto& y : family.neighborsBelow(x, n)) {
      if (y.id == x) {
        problems.push_back("vertex " + std::to_string(x) + " lists itself as a neighbor");
        continue;
      }
      auto back = family.neighborsBelow(y.id, x + 1);
      auto it = std::find_if(back.begin(), back.end(), [x](const Neighbor& b) { return b.id == x; });
      if (it == back.end()) {
        problems.push_back(std::to_string(y.id) + " is a neighbor of " + std::to_string(x) + " but not conversely");
      } else if (it->weight != y.weight) {
        problems.push_back("E(" + std::to_string(x) + ", " + std::to_string(y.id) + ") differs between the two ends");
      }
    }
  }
  return problems;
}

}  // namespace locfin

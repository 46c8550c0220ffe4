#include "locfin/random_graphs.hpp"

#include <stdexcept>

namespace locfin {

FiniteGraph randomWeightedGraph(std::mt19937_64& rng, const RandomGraphOptions& opts) {
  if (opts.minVertices == 0 || opts.minVertices > opts.maxVertices) throw std::invalid_argument("bad vertex range");
  if (!(opts.minWeight > 0.0) || opts.minWeight > opts.maxWeight) throw std::invalid_argument("bad weight range");
  std::uniform_int_distribution<std::size_t> size(opts.minVertices, opts.maxVertices);
  std::uniform_real_distribution<double> prob(opts.minProbability, opts.maxProbability);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> weight(opts.minWeight, opts.maxWeight);
  const std::size_t n = size(rng);
  const double p = prob(rng);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng) < p) edges.push_back({u, v, weight(rng)});
    }
  }
  return FiniteGraph(n, std::move(edges));
}

std::vector<FiniteGraph> randomGraphSuite(std::uint64_t seed, std::size_t count, const RandomGraphOptions& opts) {
  std::mt19937_64 rng(seed);
  std::vector<FiniteGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(randomWeightedGraph(rng, opts));
  return out;
}

SurgeryPlan randomSurgeryPlan(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> partCount(2, 6);
  std::uniform_int_distribution<int> bound(1, 4);
  std::uniform_real_distribution<double> crossWeight(0.1, 1.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  RandomGraphOptions small;
  small.minVertices = 1;
  small.maxVertices = 12;

  SurgeryPlan plan;
  const int maxCrossDegree = bound(rng);
  plan.rowBound = maxCrossDegree;
  const std::size_t parts = partCount(rng);
  for (std::size_t i = 0; i < parts; ++i) {
    auto g = randomWeightedGraph(rng, small);
    std::uniform_int_distribution<VertexId> anchor(0, g.vertexCount() - 1);
    const VertexId a = anchor(rng);
    plan.parts.push_back({GraphFamily::fromGraph(std::move(g), "random"), a});
  }
  std::vector<int> crossDegree(parts, 0);
  for (std::size_t a = 0; a < parts; ++a) {
    for (std::size_t b = a + 1; b < parts; ++b) {
      if (coin(rng) >= 0.6) continue;
      const double w = crossWeight(rng);
      if (crossDegree[a] >= maxCrossDegree || crossDegree[b] >= maxCrossDegree) continue;
      ++crossDegree[a];
      ++crossDegree[b];
      plan.crossEdges.push_back({a, b, w});
    }
  }
  if (plan.crossEdges.empty()) plan.crossEdges.push_back({0, 1, crossWeight(rng)});
  return plan;
}

}  // namespace locfin

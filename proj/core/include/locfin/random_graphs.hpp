#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "locfin/generators.hpp"
#include "locfin/graph.hpp"

namespace locfin {

/**
   Erdős–Rényi style test graphs: vertex count uniform in
   [minVertices, maxVertices], edge probability uniform in
   [minProbability, maxProbability] per graph, weights uniform in
   [minWeight, maxWeight].
 */
struct RandomGraphOptions {
  std::size_t minVertices = 2;
  std::size_t maxVertices = 60;
  double minProbability = 0.05;
  double maxProbability = 0.5;
  double minWeight = 0.1;
  double maxWeight = 10.0;
};

FiniteGraph randomWeightedGraph(std::mt19937_64& rng, const RandomGraphOptions& opts = {});

/// `count` graphs from one generator seeded with `seed`.
std::vector<FiniteGraph> randomGraphSuite(std::uint64_t seed, std::size_t count, const RandomGraphOptions& opts = {});

/**
   Random surgery plan: 2 to 6 random parts of at most 12 vertices, a random
   anchor per part and cross edges with weights in [0.1, 1]. M is an integer
   in [1, 4] capping the number of cross edges at each anchor, so the anchor
   weight sums stay below M as well.
 */
SurgeryPlan randomSurgeryPlan(std::mt19937_64& rng);

}  // namespace locfin

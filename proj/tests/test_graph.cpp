#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "locfin/graph.hpp"
#include "oracles.hpp"

using namespace locfin;

namespace {

FiniteGraph triangle() { return FiniteGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}); }

}  // namespace

TEST(FiniteGraph, StoresEachEdgeOnceAndBothDirections) {
  const FiniteGraph g(4, {{2, 0, 1.5}, {1, 3, 0.5}});
  EXPECT_EQ(g.vertexCount(), 4u);
  EXPECT_EQ(g.edgeCount(), 2u);
  EXPECT_EQ(g.edges()[0].u, 0u);
  EXPECT_EQ(g.edges()[0].v, 2u);
  EXPECT_DOUBLE_EQ(g.weight(0, 2), 1.5);
  EXPECT_DOUBLE_EQ(g.weight(2, 0), 1.5);
  EXPECT_DOUBLE_EQ(g.weight(0, 1), 0.0);
  EXPECT_TRUE(g.adjacent(3, 1));
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_EQ(g.degree(1), 1u);
  EXPECT_EQ(g.maxDegree(), 1u);
}

TEST(FiniteGraph, RejectsOutOfRangeEndpointsAndQueries) {
  EXPECT_ANY_THROW(FiniteGraph(2, {{0, 2, 1.0}}));
  const auto g = triangle();
  EXPECT_THROW((void)g.neighbors(3), std::domain_error);
}

TEST(FiniteGraph, TriangleCountOnK3) {
  const auto g = triangle();
  for (VertexId x = 0; x < 3; ++x) {
    EXPECT_EQ(g.triangleCount(x), 2u);
    EXPECT_DOUBLE_EQ(g.weightedTriangleSum(x), 2.0);
  }
}

TEST(FiniteGraph, StarHasNoTriangles) {
  const FiniteGraph s(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
  for (VertexId x = 0; x < 5; ++x) EXPECT_EQ(s.triangleCount(x), 0u);
}

TEST(FiniteGraph, TriangleCountMatchesTripleEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::randomGraph(rng, 25);
    for (VertexId x = 0; x < g.vertexCount(); ++x) EXPECT_EQ(g.triangleCount(x), oracle::triangles(g, x));
  }
}

TEST(FiniteGraph, WeightedTriangleSumOnWeightedK3) {
  const FiniteGraph g(3, {{0, 1, 2.0}, {1, 2, 3.0}, {0, 2, 5.0}});
  // From vertex 0 the opposite edge (1,2) is seen twice.
  EXPECT_DOUBLE_EQ(g.weightedTriangleSum(0), 6.0);
  EXPECT_DOUBLE_EQ(g.weightedTriangleSum(1), 10.0);
}

TEST(Validate, AcceptsGeneratorStyleGraph) { EXPECT_TRUE(validate(triangle()).empty()); }

TEST(Validate, ReportsLoopsWeightsAndDuplicates) {
  const FiniteGraph loop(2, {{1, 1, 1.0}, {0, 1, 1.0}});
  const auto v1 = validate(loop);
  ASSERT_FALSE(v1.empty());
  EXPECT_EQ(v1.front().kind, Violation::Kind::Loop);

  const FiniteGraph zero(2, {{0, 1, 0.0}});
  const auto v2 = validate(zero);
  ASSERT_FALSE(v2.empty());
  EXPECT_EQ(v2.front().kind, Violation::Kind::NonPositiveWeight);

  const FiniteGraph dup(3, {{0, 1, 1.0}, {1, 0, 2.0}});
  bool sawDuplicate = false;
  for (const auto& v : validate(dup)) {
    if (v.kind == Violation::Kind::DuplicateEdge) {
      sawDuplicate = true;
      EXPECT_EQ(v.u, 0u);
      EXPECT_EQ(v.v, 1u);
    }
  }
  EXPECT_TRUE(sawDuplicate);
}

TEST(Validate, ReportsLabelCountMismatch) {
  const FiniteGraph g(3, {{0, 1, 1.0}}, {"a", "b"});
  bool saw = false;
  for (const auto& v : validate(g)) saw = saw || v.kind == Violation::Kind::LabelCount;
  EXPECT_TRUE(saw);
}

TEST(InducedSubgraph, KeepsWeightsAndRenumbers) {
  const FiniteGraph g(5, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 3.0}, {3, 4, 4.0}, {0, 4, 5.0}}, {"a", "b", "c", "d", "e"});
  const std::vector<VertexId> keep = {4, 2, 3, 2};
  const auto sub = inducedSubgraph(g, keep);
  EXPECT_EQ(sub.graph.vertexCount(), 3u);
  EXPECT_EQ(sub.originalOf, (std::vector<VertexId>{2, 3, 4}));
  EXPECT_EQ(sub.graph.edgeCount(), 2u);
  EXPECT_DOUBLE_EQ(sub.graph.weight(0, 1), 3.0);
  EXPECT_DOUBLE_EQ(sub.graph.weight(1, 2), 4.0);
  EXPECT_EQ(sub.graph.label(0), "c");
}

TEST(InducedSubgraph, DegreesAndTrianglesAreMonotone) {
  std::mt19937_64 rng(12);
  std::bernoulli_distribution keepCoin(0.6);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::randomGraph(rng, 30);
    std::vector<VertexId> keep;
    for (VertexId x = 0; x < g.vertexCount(); ++x) {
      if (keepCoin(rng)) keep.push_back(x);
    }
    const auto sub = inducedSubgraph(g, keep);
    for (VertexId i = 0; i < sub.graph.vertexCount(); ++i) {
      const auto x = sub.originalOf[i];
      EXPECT_LE(sub.graph.degree(i), g.degree(x));
      EXPECT_LE(sub.graph.triangleCount(i), g.triangleCount(x));
    }
  }
}

TEST(DegreeSequence, MatchesDegrees) {
  const auto g = triangle();
  EXPECT_EQ(degreeSequence(g), (std::vector<std::size_t>{2, 2, 2}));
}

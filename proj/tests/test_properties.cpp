// Seeded property tests over random graphs and generator windows.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "locfin/complexity.hpp"
#include "locfin/generators.hpp"
#include "locfin/random_graphs.hpp"
#include "locfin/spectral.hpp"
#include "oracles.hpp"

using namespace locfin;

namespace {

constexpr std::uint64_t kSeed = 0x5eed;

std::vector<GraphFamily> sampleFamilies() {
  return {completeGraph(9),  starGraph(9),   hubOfCliques(3, 4), chainedStarCliques(1), chainedStarCliques(3),
          wordTree(2, 3),    fTree(1.0, 400), fTree(0.5, 400, true), jacobiChain(1.0, 50), disjointStars()};
}

}  // namespace

TEST(Property, RandomSuiteIsDeterministic) {
  const auto a = randomGraphSuite(kSeed, 10);
  const auto b = randomGraphSuite(kSeed, 10);
  EXPECT_EQ(a, b);
  const auto c = randomGraphSuite(kSeed + 1, 10);
  EXPECT_NE(a, c);
}

TEST(Property, GeneratedFamiliesAreSymmetricAndValid) {
  for (const auto& f : sampleFamilies()) {
    const std::size_t n = std::min<std::size_t>(f.budget().value_or(300), 300);
    EXPECT_TRUE(checkSymmetry(f, n).empty()) << f.name();
    const auto t = truncate(f, n);
    EXPECT_TRUE(validate(t.graph).empty()) << f.name();
    for (VertexId x = 0; x < n; ++x) {
      for (const auto& y : t.graph.neighbors(x)) EXPECT_EQ(t.graph.weight(y.id, x), y.weight);
      if (t.interior[x]) EXPECT_EQ(t.graph.degree(x), f.degree(x)) << f.name() << " " << x;
    }
  }
}

TEST(Property, TriangleCountsAreEvenAndSumToSixTimesTriangles) {
  auto graphs = randomGraphSuite(kSeed, 40, {.maxVertices = 30});
  for (const auto& f : sampleFamilies()) {
    graphs.push_back(truncate(f, std::min<std::size_t>(f.budget().value_or(120), 120)).graph);
  }
  for (const auto& g : graphs) {
    std::uint64_t total = 0;
    for (VertexId x = 0; x < g.vertexCount(); ++x) {
      EXPECT_EQ(g.triangleCount(x) % 2, 0u);
      total += g.triangleCount(x);
    }
    EXPECT_EQ(total, 6 * oracle::unorderedTriangles(g));
  }
}

TEST(Property, CauchyInterlacingUnderVertexDeletion) {
  std::mt19937_64 rng(kSeed);
  for (const auto& g : randomGraphSuite(kSeed, 30, {.maxVertices = 35})) {
    if (g.vertexCount() < 3) continue;
    std::uniform_int_distribution<VertexId> pick(0, g.vertexCount() - 1);
    const VertexId drop = pick(rng);
    std::vector<VertexId> keep;
    for (VertexId x = 0; x < g.vertexCount(); ++x) {
      if (x != drop) keep.push_back(x);
    }
    const auto big = denseSpectrum(adjacencyMatrix(g)).eigenvalues;
    const auto small = denseSpectrum(adjacencyMatrix(inducedSubgraph(g, keep).graph)).eigenvalues;
    for (std::size_t i = 0; i < small.size(); ++i) {
      EXPECT_LE(big[i], small[i] + 1e-9);
      EXPECT_LE(small[i], big[i + 1] + 1e-9);
    }
  }
}

TEST(Property, DenseAndLanczosAgree) {
  for (const auto& g : randomGraphSuite(kSeed + 2, 25)) {
    if (g.edgeCount() == 0) continue;
    const auto op = adjacencyMatrix(g);
    const auto dense = denseSpectrum(op);
    const auto iter = extremalEigenvalues(op, Which::Both, 1e-10);
    EXPECT_NEAR(dense.min(), iter.min(), 1e-8);
    EXPECT_NEAR(dense.max(), iter.max(), 1e-8);
  }
}

TEST(Property, SandwichWitnessAndDiscriminantHold) {
  for (const auto& g : randomGraphSuite(kSeed + 3, 40)) {
    if (g.edgeCount() == 0) continue;
    const auto spectrum = denseSpectrum(adjacencyMatrix(g));
    const auto s = checkEstbdSandwich(g, spectrum);
    EXPECT_TRUE(s.lower.verdict) << s.lower.slack;
    EXPECT_TRUE(s.upper.verdict) << s.upper.slack;
    for (VertexId x = 0; x < g.vertexCount(); ++x) {
      if (g.degree(x) > 0) EXPECT_LE(rayleighWitness(g, x), spectrum.max() + 1e-9);
    }
    for (const auto& c : checkDiscriminantInequality(g, {}, -spectrum.min() + 1.0)) EXPECT_TRUE(c.verdict) << c.slack;
  }
}

TEST(Property, DiscriminantHoldsOnInducedSubgraphs) {
  std::mt19937_64 rng(kSeed + 4);
  std::bernoulli_distribution coin(0.5);
  for (const auto& g : randomGraphSuite(kSeed + 4, 20)) {
    if (g.edgeCount() == 0) continue;
    const double c = -denseSpectrum(adjacencyMatrix(g)).min() + 1e-6;
    std::vector<VertexId> subset;
    for (VertexId x = 0; x < g.vertexCount(); ++x) {
      if (coin(rng)) subset.push_back(x);
    }
    if (subset.empty()) continue;
    for (const auto& check : checkDiscriminantInequality(g, subset, c)) EXPECT_TRUE(check.verdict) << check.slack;
  }
}

TEST(Property, RandomSurgeryRespectsRowBound) {
  std::mt19937_64 rng(kSeed + 5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto plan = randomSurgeryPlan(rng);
    const auto s = surgery(plan, 12);
    EXPECT_TRUE(surgeryNormCheck(s.glued, s.disjoint, plan.rowBound, 1.0).verdict);
    EXPECT_TRUE(surgeryNormCheck(s.glued, s.disjoint, plan.rowBound, s.maxCrossWeight).verdict);
  }
}

TEST(Property, ComplexityInfimaAreMonotoneInThreshold) {
  for (const auto& g : randomGraphSuite(kSeed + 6, 20)) {
    const auto t = truncate(GraphFamily::fromGraph(g), g.vertexCount());
    const auto report = complexityReport(t, {}, false);
    for (std::size_t i = 1; i < report.thresholdInfima.size(); ++i) {
      const auto& lo = report.thresholdInfima[i - 1];
      const auto& hi = report.thresholdInfima[i];
      EXPECT_GE(lo.vertexCount, hi.vertexCount);
      if (lo.infRatio && hi.infRatio) EXPECT_LE(*lo.infRatio, *hi.infRatio);
    }
  }
}

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "locfin/generators.hpp"
#include "locfin/spectral.hpp"
#include "oracles.hpp"

using namespace locfin;

namespace {

FiniteGraph whole(const GraphFamily& f) { return truncate(f, *f.budget()).graph; }

}  // namespace

TEST(SymmetricOperator, RejectsAsymmetricStructure) {
  std::vector<std::vector<SymmetricOperator::Entry>> rows = {{{1, 1.0}}, {}};
  EXPECT_ANY_THROW(SymmetricOperator(2, rows));
}

TEST(SymmetricOperator, ApplyAndNorm) {
  const auto op = adjacencyMatrix(FiniteGraph(3, {{0, 1, 2.0}, {1, 2, 3.0}}));
  std::vector<double> x = {1.0, 1.0, 1.0};
  std::vector<double> y(3);
  op.apply(x, y);
  EXPECT_EQ(y, (std::vector<double>{2.0, 5.0, 3.0}));
  EXPECT_DOUBLE_EQ(op.infNorm(), 5.0);
  EXPECT_DOUBLE_EQ(op.entry(2, 1), 3.0);
}

TEST(DenseSpectrum, CompleteGraph) {
  const auto r = denseSpectrum(adjacencyMatrix(whole(completeGraph(7))));
  ASSERT_EQ(r.eigenvalues.size(), 7u);
  EXPECT_NEAR(r.max(), 6.0, 1e-10);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(r.eigenvalues[i], -1.0, 1e-10);
  for (double res : r.residualNorms) EXPECT_LE(res, 1e-10);
}

TEST(DenseSpectrum, MatchesJacobiRotationOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = oracle::randomGraph(rng, 30);
    const auto expected = oracle::eigenvalues(g);
    const auto r = denseSpectrum(adjacencyMatrix(g));
    ASSERT_EQ(r.eigenvalues.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(r.eigenvalues[i], expected[i], 1e-9);
  }
}

TEST(DenseSpectrum, RespectsDenseCap) {
  Tolerances tol;
  tol.denseCap = 5;
  EXPECT_THROW(denseSpectrum(adjacencyMatrix(whole(completeGraph(6))), tol), std::length_error);
}

TEST(KknRoots, SmallCasesAgainstOracle) {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto roots = kknCharPolyRoots(k, n);
      auto fromPoly = expandRoots(roots);
      std::sort(fromPoly.begin(), fromPoly.end());
      const auto expected = oracle::eigenvalues(whole(hubOfCliques(k, n)));
      ASSERT_EQ(fromPoly.size(), expected.size()) << k << " " << n;
      for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(fromPoly[i], expected[i], 1e-9);
    }
  }
}

TEST(KknRoots, StarCase) {
  // K_{3,1} is the star S_4: +-sqrt(3) and 0 twice.
  auto values = expandRoots(kknCharPolyRoots(3, 1));
  std::sort(values.begin(), values.end());
  ASSERT_EQ(values.size(), 4u);
  EXPECT_NEAR(values[0], -std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(values[1], 0.0, 1e-12);
  EXPECT_NEAR(values[2], 0.0, 1e-12);
  EXPECT_NEAR(values[3], std::sqrt(3.0), 1e-12);
}

TEST(Lanczos, AgreesWithDenseOnRandomGraphs) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::randomGraph(rng, 60);
    if (g.edgeCount() == 0) continue;
    const auto op = adjacencyMatrix(g);
    const auto dense = denseSpectrum(op);
    const auto iter = extremalEigenvalues(op, Which::Both, 1e-10);
    EXPECT_NEAR(iter.min(), dense.min(), 1e-8);
    EXPECT_NEAR(iter.max(), dense.max(), 1e-8);
    EXPECT_EQ(iter.method, Method::Iterative);
  }
}

TEST(Lanczos, AgreesWithDenseOnLargeStructuredGraph) {
  const auto g = truncate(chainedStarCliques(1), 1000).graph;
  const auto op = adjacencyMatrix(g);
  const auto dense = denseSpectrum(op);
  const auto iter = extremalEigenvalues(op, Which::Both, 1e-10);
  EXPECT_NEAR(iter.min(), dense.min(), 1e-8);
  EXPECT_NEAR(iter.max(), dense.max(), 1e-8);
}

TEST(Lanczos, ImpossibleToleranceThrowsConvergenceError) {
  const auto op = adjacencyMatrix(truncate(wordTree(2, 5), 3000).graph);
  LanczosOptions opts;
  opts.maxRestarts = 3;
  EXPECT_THROW(extremalEigenvalues(op, Which::Max, 1e-30, opts), ConvergenceError);
}

TEST(ExtremalSpectrum, SwitchesToIterativeAboveCap) {
  Tolerances tol;
  tol.denseCap = 10;
  const auto r = extremalSpectrum(adjacencyMatrix(whole(completeGraph(20))), tol);
  EXPECT_EQ(r.method, Method::Iterative);
  EXPECT_NEAR(r.max(), 19.0, 1e-8);
  EXPECT_NEAR(r.min(), -1.0, 1e-8);
}

TEST(Sandwich, SingleEdgeIsTight) {
  const FiniteGraph g(2, {{0, 1, 3.0}});
  const auto s = checkEstbdSandwich(g);
  EXPECT_NEAR(s.supSquared, 9.0, 1e-10);
  EXPECT_NEAR(s.lower.lhs, 9.0, 1e-12);
  EXPECT_NEAR(s.upper.rhs, 9.0, 1e-12);
  EXPECT_TRUE(s.lower.verdict);
  EXPECT_TRUE(s.upper.verdict);
}

TEST(Sandwich, StarValues) {
  // S_5: sup sigma(A^2) = 4, attained by both sides of the sandwich.
  const auto s = checkEstbdSandwich(whole(starGraph(5)));
  EXPECT_NEAR(s.supSquared, 4.0, 1e-10);
  EXPECT_NEAR(s.lower.lhs, 4.0, 1e-12);
  EXPECT_NEAR(s.upper.rhs, 4.0, 1e-12);
}

TEST(Witness, CompleteGraphIsExact) {
  // K_3: (1/sqrt 2) * 2 + (1/4) * 2 = sqrt 2 + 1/2, below lambda_max = 2.
  const auto g = whole(completeGraph(3));
  EXPECT_NEAR(rayleighWitness(g, 0), std::sqrt(2.0) + 0.5, 1e-12);
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto kn = whole(completeGraph(n));
    const double d = static_cast<double>(n - 1);
    const double expected = std::sqrt(d) + d * (d - 1) / (2 * d);
    EXPECT_NEAR(rayleighWitness(kn, 0), expected, 1e-12);
    EXPECT_LE(rayleighWitness(kn, 0), d + 1e-12);
  }
  EXPECT_THROW(rayleighWitness(FiniteGraph(2, {}), 0), std::domain_error);
}

TEST(Witness, BelowLambdaMaxOnRandomGraphs) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::randomGraph(rng, 30);
    const double top = oracle::eigenvalues(g).back();
    for (VertexId x = 0; x < g.vertexCount(); ++x) {
      if (g.degree(x) == 0) continue;
      EXPECT_LE(rayleighWitness(g, x), top + 1e-9);
    }
  }
}

TEST(Discriminant, K3WithCOneIsTight) {
  // (1/C) * 4 <= 2 + 2C is an equality at C = 1.
  const auto checks = checkDiscriminantInequality(whole(completeGraph(3)), {}, 1.0);
  ASSERT_EQ(checks.size(), 3u);
  for (const auto& c : checks) {
    EXPECT_NEAR(c.lhs, 4.0, 1e-12);
    EXPECT_NEAR(c.rhs, 4.0, 1e-12);
    EXPECT_TRUE(c.verdict);
  }
}

TEST(Discriminant, FailsBelowLambdaMin) {
  // S_5 has lambda_min = -2; at C = 1 the hub gives 16 <= 0 + 4, false.
  const auto checks = checkDiscriminantInequality(whole(starGraph(5)), {}, 1.0);
  EXPECT_FALSE(checks[0].verdict);
  const auto ok = checkDiscriminantInequality(whole(starGraph(5)), {});
  for (const auto& c : ok) EXPECT_TRUE(c.verdict);
}

TEST(Discriminant, RejectsNonPositiveC) {
  EXPECT_THROW(checkDiscriminantInequality(whole(completeGraph(3)), {}, 0.0), std::invalid_argument);
}

TEST(SurgeryNorm, SingleCrossEdge) {
  SurgeryPlan plan;
  plan.parts = {{completeGraph(3), 0}, {completeGraph(3), 0}};
  plan.crossEdges = {{0, 1, 0.8}};
  const auto s = surgery(plan, 10);
  const auto check = surgeryNormCheck(s.glued, s.disjoint, plan.rowBound, s.maxCrossWeight);
  EXPECT_NEAR(check.lhs, 0.8, 1e-12);
  EXPECT_NEAR(check.rhs, 0.8, 1e-12);
  EXPECT_TRUE(check.verdict);
}

TEST(SurgeryNorm, GeneralBoundIsTheRowBound) {
  // Path of three anchors with weights 0.6 and M = 1.2: the norm is
  // 0.6 sqrt 2, within M but above M * max weight.
  SurgeryPlan plan;
  plan.parts = {{starGraph(3), 0}, {starGraph(3), 0}, {starGraph(3), 0}};
  plan.crossEdges = {{0, 1, 0.6}, {1, 2, 0.6}};
  plan.rowBound = 1.2;
  const auto s = surgery(plan, 10);
  const auto weighted = surgeryNormCheck(s.glued, s.disjoint, plan.rowBound, s.maxCrossWeight);
  EXPECT_NEAR(weighted.lhs, 0.6 * std::sqrt(2.0), 1e-12);
  EXPECT_FALSE(weighted.verdict);
  const auto general = surgeryNormCheck(s.glued, s.disjoint, plan.rowBound, 1.0);
  EXPECT_TRUE(general.verdict);
}

TEST(SurgeryNorm, RejectsShapeMismatch) {
  EXPECT_THROW(surgeryNormCheck(whole(completeGraph(3)), whole(completeGraph(4)), 1.0, 1.0), std::invalid_argument);
}

TEST(Laplacian, PositiveSemidefiniteWithZeroRowSums) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = oracle::randomGraph(rng, 25);
    const auto lap = laplacianMatrix(g);
    const auto dense = lap.toDense();
    const auto n = g.vertexCount();
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) sum += dense[i * n + j];
      EXPECT_NEAR(sum, 0.0, 1e-10);
    }
    EXPECT_GE(denseSpectrum(lap).min(), -1e-9);
  }
}

TEST(UnboundednessScan, ChainedStarsGrowBothWays) {
  const std::vector<std::size_t> sizes = {20, 60, 150, 400};
  const auto scan = unboundednessScan(chainedStarCliques(1), sizes);
  ASSERT_EQ(scan.rows.size(), sizes.size());
  EXPECT_TRUE(scan.maxNondecreasing);
  EXPECT_TRUE(scan.minNonincreasing);
  EXPECT_GT(scan.rows.back().lambdaMax, scan.rows.front().lambdaMax);
}

TEST(UnboundednessScan, RequiresIncreasingSizes) {
  const std::vector<std::size_t> sizes = {30, 20};
  EXPECT_ANY_THROW(unboundednessScan(chainedStarCliques(1), sizes));
}

TEST(LessEqual, UsesAbsoluteAndRelativeSlack) {
  Tolerances tol;
  tol.absoluteSlack = 1e-6;
  tol.relativeSlack = 0.0;
  EXPECT_TRUE(lessEqual("a", 1.0 + 5e-7, 1.0, tol).verdict);
  EXPECT_FALSE(lessEqual("a", 1.0 + 5e-6, 1.0, tol).verdict);
}

#include <gtest/gtest.h>

#include <random>

#include "locfin/generators.hpp"
#include "locfin/verify.hpp"
#include "oracles.hpp"

using namespace locfin;

TEST(Verify, BruteForceTrianglesAgreesWithOracle) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = oracle::randomGraph(rng, 20);
    for (VertexId x = 0; x < g.vertexCount(); ++x) EXPECT_EQ(bruteForceTriangles(g, x), oracle::triangles(g, x));
  }
}

TEST(Verify, GeneratedTestGraphsAreValid) {
  const auto graphs = generatedTestGraphs();
  EXPECT_FALSE(graphs.empty());
  for (const auto& g : graphs) EXPECT_TRUE(validate(g).empty());
}

TEST(Verify, CheapCriteriaPassAndFillTheirRows) {
  VerifyConfig cfg;
  cfg.randomGraphs = 20;
  cfg.surgeryPlans = 10;
  for (int id : {1, 2, 6, 7, 8, 14}) {
    const auto r = runCriterion(id, cfg);
    EXPECT_EQ(r.id, id);
    EXPECT_TRUE(r.passed) << id << ": " << r.diagnostic;
    EXPECT_FALSE(r.description.empty());
    EXPECT_FALSE(r.anchor.empty());
    EXPECT_FALSE(r.measured.empty());
  }
}

TEST(Verify, VerdictsDoNotDependOnTheSeed) {
  VerifyConfig a;
  a.randomGraphs = 15;
  a.surgeryPlans = 8;
  a.only = {6, 8};
  VerifyConfig b = a;
  b.seed = 7;
  const auto ra = runVerifySuite(a);
  const auto rb = runVerifySuite(b);
  ASSERT_EQ(ra.criteria.size(), 2u);
  ASSERT_EQ(rb.criteria.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(ra.criteria[i].passed, rb.criteria[i].passed);
  EXPECT_NE(ra.configHash, rb.configHash);
  EXPECT_EQ(ra.configHash, runVerifySuite(a).configHash);
}

TEST(Verify, UnreachableToleranceIsAControlledFailure) {
  VerifyConfig cfg;
  cfg.tol.iterativeResidual = 1e-18;
  const auto r = runCriterion(11, cfg);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(r.nonConvergence);
  EXPECT_FALSE(r.diagnostic.empty());
}

TEST(Verify, ReportsContainEveryRequestedCriterion) {
  VerifyConfig cfg;
  cfg.only = {1, 14};
  const auto suite = runVerifySuite(cfg);
  EXPECT_TRUE(suite.allPassed);
  const auto table = verifyReportTable(suite);
  EXPECT_NE(table.find("criterion  1"), std::string::npos) << table;
  EXPECT_NE(table.find("criterion 14"), std::string::npos) << table;
  const auto json = verifyReportJson(suite);
  EXPECT_NE(json.find("\"config\""), std::string::npos);
  EXPECT_THROW(runCriterion(0, cfg), std::out_of_range);
  EXPECT_THROW(runCriterion(kCriterionCount + 1, cfg), std::out_of_range);
}

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "locfin/generators.hpp"
#include "locfin/io.hpp"
#include "oracles.hpp"

using namespace locfin;

namespace {

std::string messageOf(const std::string& text) {
  try {
    graphFromJson(text);
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(GraphJson, RoundTripK4) {
  const auto g = truncate(completeGraph(4), 4).graph;
  const auto text = graphToJson(g);
  const auto back = graphFromJson(text);
  EXPECT_EQ(back.vertexCount(), 4u);
  EXPECT_EQ(back.edgeCount(), 6u);
  for (const auto& e : back.edges()) EXPECT_LT(e.u, e.v);
  EXPECT_EQ(back.edges().size(), g.edges().size());
  for (std::size_t i = 0; i < g.edges().size(); ++i) EXPECT_EQ(back.edges()[i], g.edges()[i]);
}

TEST(GraphJson, RoundTripIsBitExactWithLabelsAndProvenance) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    auto raw = oracle::randomGraph(rng, 20, 1e-6, 1e6);
    std::vector<std::string> labels;
    for (VertexId x = 0; x < raw.vertexCount(); ++x) labels.push_back("v\"" + std::to_string(x) + "\\");
    const FiniteGraph g(raw.vertexCount(), {raw.edges().begin(), raw.edges().end()}, labels);
    Provenance prov;
    prov.configHash = configHash("trial");
    prov.seed = 51;
    prov.graphRef = "random";
    EXPECT_EQ(graphFromJson(graphToJson(g, prov)), g);
  }
}

TEST(GraphJson, RejectsDuplicateEdgeNamingThePair) {
  const auto msg = messageOf(R"({"vertexCount": 3, "edges": [[0, 1, 1.0], [1, 2, 1.0], [0, 1, 2.0]]})");
  EXPECT_NE(msg.find("duplicate edge (0, 1)"), std::string::npos) << msg;
}

TEST(GraphJson, RejectsNonCanonicalOrder) {
  const auto msg = messageOf(R"({"vertexCount": 3, "edges": [[2, 1, 1.0]]})");
  EXPECT_NE(msg.find("violates i < j"), std::string::npos) << msg;
  EXPECT_NE(messageOf(R"({"vertexCount": 3, "edges": [[1, 1, 1.0]]})").find("violates"), std::string::npos);
}

TEST(GraphJson, ReportsParseErrorPosition) {
  try {
    graphFromJson("{\n  \"vertexCount\": 3,\n  \"edges\": [[0, 1, ]]\n}");
    FAIL() << "expected a parse error";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 0u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(GraphJson, RejectsStructuralProblems) {
  EXPECT_FALSE(messageOf(R"({"vertexCount": 3, "edges": [[0, 3, 1.0]]})").empty());
  EXPECT_FALSE(messageOf(R"({"vertexCount": 3, "edges": [[0, 1, 0.0]]})").empty());
  EXPECT_FALSE(messageOf(R"({"vertexCount": 3, "edges": [[0, 1, -1.0]]})").empty());
  EXPECT_FALSE(messageOf(R"({"vertexCount": 3, "edges": [[0, 1]]})").empty());
  EXPECT_FALSE(messageOf(R"({"vertexCount": 3, "edges": [], "extra": 1})").empty());
  EXPECT_FALSE(messageOf(R"({"vertexCount": 3, "labels": ["a"], "edges": []})").empty());
  EXPECT_FALSE(messageOf(R"({"vertexCount": -1, "edges": []})").empty());
  EXPECT_FALSE(messageOf(R"({"edges": []})").empty());
  EXPECT_FALSE(messageOf(R"([1, 2])").empty());
}

TEST(GraphJson, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "locfin_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "k5.json";
  const auto g = truncate(hubOfCliques(2, 3), 7).graph;
  exportGraph(g, path, Provenance{});
  EXPECT_EQ(importGraph(path), g);
  EXPECT_ANY_THROW(importGraph(dir / "missing.json"));
}

TEST(ConfigHash, FnvReferenceVectors) {
  EXPECT_EQ(configHash(""), "cbf29ce484222325");
  EXPECT_EQ(configHash("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(configHash("foobar"), "85944171f73967e8");
}

TEST(Csv, HeaderAndWidthCheck) {
  const auto path = std::filesystem::temp_directory_path() / "locfin_csv_test.csv";
  {
    Provenance prov;
    prov.configHash = "00000000000000ff";
    prov.seed = 7;
    CsvWriter csv(path, prov, {"a", "b"});
    csv.row({"1", "2"});
    EXPECT_ANY_THROW(csv.row({"1"}));
    csv.section({"x"});
    csv.row({"3"});
  }
  std::ifstream in(path);
  std::string first;
  std::string header;
  std::getline(in, first);
  std::getline(in, header);
  EXPECT_EQ(first.rfind("# tool=locfin ", 0), 0u) << first;
  EXPECT_NE(first.find("seed=7"), std::string::npos);
  EXPECT_NE(first.find("config=00000000000000ff"), std::string::npos);
  EXPECT_EQ(header, "a,b");
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(formatDouble(0.1), "0.1");
  EXPECT_EQ(formatDouble(1.0), "1");
  const double x = 1.0 / 3.0;
  EXPECT_EQ(std::stod(formatDouble(x)), x);
}

TEST(Params, ParseAndReject) {
  const auto p = parseParams("k=3,n=4,alpha=1.5");
  EXPECT_EQ(p.at("k"), 3.0);
  EXPECT_EQ(p.at("alpha"), 1.5);
  EXPECT_TRUE(parseParams("").empty());
  EXPECT_THROW(parseParams("k=3,k=4"), std::invalid_argument);
  EXPECT_THROW(parseParams("k=x"), std::invalid_argument);
  EXPECT_THROW(parseParams("k"), std::invalid_argument);
}

TEST(FamilyByName, BuildsAndValidates) {
  EXPECT_EQ(familyByName("kkn", {{"k", 2}, {"n", 3}}, std::nullopt).size().value(), 7u);
  EXPECT_EQ(familyByName("ftree", {{"alpha", 1}}, 100).budget().value(), 100u);
  const auto wt = familyByName("wordtree", {{"M", 2}}, 50);
  EXPECT_GE(wt.budget().value(), 50u);
  EXPECT_THROW(familyByName("kkn", {{"k", 2}}, std::nullopt), std::invalid_argument);
  EXPECT_THROW(familyByName("kkn", {{"k", 2}, {"n", 3}, {"z", 1}}, std::nullopt), std::invalid_argument);
  EXPECT_THROW(familyByName("kkn", {{"k", 2.5}, {"n", 3}}, std::nullopt), std::invalid_argument);
  EXPECT_THROW(familyByName("jacobi", {{"alpha", 1}}, std::nullopt), std::invalid_argument);
  EXPECT_THROW(familyByName("nope", {}, 3), std::invalid_argument);
}

TEST(SurgeryPlanJson, ParsesAndDefaultsWeights) {
  const auto plan = surgeryPlanFromJson(R"({
    "parts": [{"family": "kkn", "params": {"k": 2, "n": 3}, "size": 7, "anchor": 0},
              {"family": "complete", "params": {"n": 4}, "anchor": 2}],
    "crossEdges": [[0, 1], [1, 0, 0.5]],
    "rowBound": 2
  })");
  ASSERT_EQ(plan.parts.size(), 2u);
  EXPECT_EQ(plan.parts[1].anchor, 2u);
  ASSERT_EQ(plan.crossEdges.size(), 2u);
  EXPECT_EQ(plan.crossEdges[0].weight, 1.0);
  EXPECT_EQ(plan.crossEdges[1].weight, 0.5);
  EXPECT_EQ(plan.rowBound, 2.0);
  EXPECT_THROW(surgeryPlanFromJson(R"({"parts": [{"params": {}}]})"), FormatError);
  EXPECT_THROW(surgeryPlanFromJson(R"({"parts": [], "crossEdges": [[0]]})"), FormatError);
}

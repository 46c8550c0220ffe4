// Runs the locfin binary and checks exit codes and outputs.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LOCFIN_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), static_cast<int>(buf.size()), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path tmp(const std::string& name) {
  const std::filesystem::path dir = LOCFIN_TEST_TMP;
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Cli, GenerateThenSpectrum) {
  const auto graph = tmp("k5.json");
  auto r = run("generate --family complete --params n=5 --out " + graph.string());
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(read(graph).find("\"vertexCount\": 5"), std::string::npos);

  const auto csv = tmp("k5_spectrum.csv");
  r = run("spectrum " + graph.string() + " --check estbd --csv " + csv.string());
  EXPECT_EQ(r.code, 0) << r.out;
  const auto text = read(csv);
  EXPECT_EQ(text.rfind("# tool=locfin", 0), 0u) << text;
  EXPECT_NE(text.find("size,lambda_min,lambda_max,check,lhs,rhs,verdict"), std::string::npos) << text;
}

TEST(Cli, GenerateToStdout) {
  const auto r = run("generate --family kkn --params k=2,n=2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"edges\""), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("generate").code, 2);
  EXPECT_EQ(run("generate --family nope --params n=3").code, 2);
  EXPECT_EQ(run("generate --family kkn --params k=2").code, 2);
  EXPECT_EQ(run("spectrum --method dense").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, MalformedGraphExitsTwoWithPosition) {
  const auto bad = tmp("bad.json");
  write(bad, "{\n  \"vertexCount\": 3,\n  \"edges\": [[0, 1, 1.0], [0, 1, 2.0]]\n}\n");
  auto r = run("spectrum " + bad.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("duplicate edge (0, 1)"), std::string::npos) << r.out;

  write(bad, "{\n  \"vertexCount\": 3,\n  \"edges\": [[0, 1, ]]\n}\n");
  r = run("witness " + bad.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("line 3"), std::string::npos) << r.out;
}

TEST(Cli, ComplexityWitnessAndDeficiencyRun) {
  const auto csv = tmp("skn.csv");
  auto r = run("complexity --family skn --params alpha=1 --windows 40,120 --witness --csv " + csv.string());
  EXPECT_EQ(r.code, 0) << r.out;
  const auto text = read(csv);
  EXPECT_NE(text.find("window,t,inf_ratio,n_vertices_at_t"), std::string::npos) << text;
  EXPECT_NE(text.find("window,center,star_order,exact"), std::string::npos) << text;

  const auto dcsv = tmp("ftree.csv");
  r = run("deficiency --family ftree --alpha 1 --window 500 --csv " + dcsv.string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(read(dcsv).find("n,f_re,f_im,partial_l2,residual"), std::string::npos);

  r = run("deficiency --family jacobi --alpha 1 --window 100 --f0 1,0");
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, WitnessOnSubset) {
  const auto graph = tmp("kkn.json");
  ASSERT_EQ(run("generate --family kkn --params k=3,n=3 --out " + graph.string()).code, 0);
  const auto csv = tmp("witness.csv");
  const auto r = run("witness " + graph.string() + " --subset 0,1,2,3,4 --csv " + csv.string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(read(csv).find("vertex,degree,rayleigh,lambda_max,star_order,exact"), std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
  auto r = run("verify --only 1,14");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS  criterion  1"), std::string::npos) << r.out;

  r = run("verify --only 11 --tol 1e-18");
  EXPECT_EQ(r.code, 3) << r.out;
  EXPECT_NE(r.out.find("FAIL  criterion 11"), std::string::npos) << r.out;

  r = run("verify --only 99");
  EXPECT_EQ(r.code, 2) << r.out;
}

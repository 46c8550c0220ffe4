// locfin command-line entry point.
//
// Exit codes: 0 success, 1 a check or criterion failed, 2 usage or input
// error, 3 an eigensolver did not converge.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "locfin/complexity.hpp"
#include "locfin/deficiency.hpp"
#include "locfin/generators.hpp"
#include "locfin/io.hpp"
#include "locfin/spectral.hpp"
#include "locfin/verify.hpp"

namespace {

using namespace locfin;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
std::vector<T> parseList(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::istringstream cell(item);
    T value{};
    if (!(cell >> value) || !(cell >> std::ws).eof()) {
      throw UsageError(std::string("bad ") + what + " entry \"" + item + "\"");
    }
    out.push_back(value);
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
  return out;
}

std::string yesNo(bool b) { return b ? "pass" : "fail"; }

struct Common {
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string json;
  std::string csv;
  std::string invocation;

  Provenance provenance(const std::string& graphRef = {}) const {
    Provenance p;
    p.configHash = configHash(invocation);
    p.seed = seed;
    p.graphRef = graphRef;
    return p;
  }
};

void writeText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// generate ------------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::string params;
  std::optional<std::size_t> size;
  std::string out;
  std::string plan;
};

int runGenerate(const GenerateArgs& a, const Common& c) {
  FiniteGraph g;
  std::string ref;
  if (a.family == "surgery") {
    if (a.plan.empty()) throw UsageError("--family surgery needs --plan");
    const auto plan = loadSurgeryPlan(a.plan);
    g = surgery(plan, a.size.value_or(std::numeric_limits<std::size_t>::max())).glued;
    ref = "surgery:" + a.plan;
  } else {
    const auto family = familyByName(a.family, parseParams(a.params), a.size);
    std::size_t n = a.size.value_or(0);
    if (family.isFinite()) n = a.size ? std::min(*a.size, *family.size()) : *family.size();
    if (n == 0) throw UsageError("family " + a.family + " needs --size");
    g = truncate(family, n).graph;
    ref = a.family + "(" + a.params + ")[" + std::to_string(n) + "]";
  }
  const auto prov = c.provenance(ref);
  if (!a.out.empty()) {
    exportGraph(g, a.out, prov);
  } else {
    std::cout << graphToJson(g, prov);
  }
  if (!c.csv.empty()) {
    CsvWriter csv(c.csv, prov, {"vertex", "degree", "triangles", "ratio"});
    for (VertexId x = 0; x < g.vertexCount(); ++x) {
      const auto d = g.degree(x);
      csv.row({std::to_string(x), std::to_string(d), std::to_string(g.triangleCount(x)),
               d == 0 ? std::string() : formatDouble(ratio(g, x))});
    }
  }
  std::cerr << "generated " << ref << ": " << g.vertexCount() << " vertices, " << g.edgeCount() << " edges\n";
  return kExitOk;
}

// spectrum ------------------------------------------------------------------

struct SpectrumArgs {
  std::string file;
  std::string method = "dense";
  bool extremal = false;
  std::string check;
  std::string subset;
  std::string plan;
  std::optional<std::size_t> size;
};

int runSpectrum(const SpectrumArgs& a, const Common& c) {
  if (a.method != "dense" && a.method != "iter") throw UsageError("--method must be dense or iter");
  if (!a.check.empty() && a.check != "estbd" && a.check != "witness" && a.check != "discriminant" &&
      a.check != "surgery") {
    throw UsageError("--check must be estbd, witness, discriminant or surgery");
  }

  Tolerances tol;
  if (c.tol) {
    if (!(*c.tol > 0)) throw UsageError("--tol must be positive");
    tol.denseResidual = *c.tol;
    tol.iterativeResidual = *c.tol;
  }

  FiniteGraph g;
  std::optional<SurgeryResult> glued;
  std::optional<SurgeryPlan> plan;
  std::string ref;
  if (!a.plan.empty()) {
    plan = loadSurgeryPlan(a.plan);
    glued = surgery(*plan, a.size.value_or(std::numeric_limits<std::size_t>::max()));
    g = glued->glued;
    ref = "surgery:" + a.plan;
  } else {
    if (a.file.empty()) throw UsageError("spectrum needs a graph file or --plan");
    g = importGraph(a.file);
    ref = a.file;
  }
  if (a.check == "surgery" && !glued) throw UsageError("--check surgery needs --plan");
  if (!a.subset.empty()) {
    if (a.check == "surgery") throw UsageError("--subset does not apply to --check surgery");
    const auto keep = parseList<VertexId>(a.subset, "subset");
    g = inducedSubgraph(g, keep).graph;
    ref += " subset{" + a.subset + "}";
  }
  if (g.vertexCount() == 0) throw UsageError("graph has no vertices");

  const auto op = adjacencyMatrix(g);
  SpectralReport spec;
  if (a.method == "iter") {
    if (g.vertexCount() < 2) throw UsageError("--method iter needs at least 2 vertices");
    spec = extremalEigenvalues(op, Which::Both, tol.iterativeResidual);
  } else {
    spec = denseSpectrum(op, tol);
  }
  spec.graphRef = ref;
  const double lmin = spec.min();
  const double lmax = spec.max();

  std::vector<BoundCheck> checks;
  if (a.check == "estbd") {
    const auto s = checkEstbdSandwich(g, spec, tol);
    checks = {s.lower, s.upper};
  } else if (a.check == "witness") {
    for (VertexId x = 0; x < g.vertexCount(); ++x) {
      if (g.degree(x) == 0) continue;
      checks.push_back(lessEqual("witness(" + std::to_string(x) + ") <= lambda_max", rayleighWitness(g, x), lmax, tol));
    }
  } else if (a.check == "discriminant") {
    std::vector<VertexId> all(g.vertexCount());
    std::iota(all.begin(), all.end(), VertexId{0});
    checks = checkDiscriminantInequality(g, all, std::max(tol.absoluteSlack, -lmin), tol);
  } else if (a.check == "surgery") {
    checks = {surgeryNormCheck(glued->glued, glued->disjoint, plan->rowBound, glued->maxCrossWeight, tol)};
  }

  bool allHold = true;
  for (const auto& ch : checks) allHold = allHold && ch.verdict;

  std::cout << "graph " << ref << ": " << g.vertexCount() << " vertices, method " << toString(spec.method) << "\n";
  std::cout << "lambda_min " << formatDouble(lmin) << "\nlambda_max " << formatDouble(lmax) << "\n";
  if (spec.full && !a.extremal) {
    std::cout << "eigenvalues";
    for (double v : spec.eigenvalues) std::cout << ' ' << formatDouble(v);
    std::cout << "\n";
  }
  for (const auto& ch : checks) {
    std::cout << yesNo(ch.verdict) << "  " << ch.name << ": " << formatDouble(ch.lhs) << ' ' << ch.relation << ' '
              << formatDouble(ch.rhs) << " (slack " << formatDouble(ch.slack) << ")\n";
  }

  const auto prov = c.provenance(ref);
  if (!c.csv.empty()) {
    CsvWriter csv(c.csv, prov, {"size", "lambda_min", "lambda_max", "check", "lhs", "rhs", "verdict"});
    const std::string n = std::to_string(g.vertexCount());
    if (checks.empty()) csv.row({n, formatDouble(lmin), formatDouble(lmax), "none", "", "", ""});
    for (const auto& ch : checks) {
      csv.row({n, formatDouble(lmin), formatDouble(lmax), "\"" + ch.name + "\"", formatDouble(ch.lhs),
               formatDouble(ch.rhs), yesNo(ch.verdict)});
    }
  }
  if (!c.json.empty()) {
    nlohmann::json j;
    j["provenance"] = {{"tool", prov.tool}, {"config", prov.configHash}, {"seed", prov.seed}, {"graph", ref}};
    j["method"] = toString(spec.method);
    j["tolerance"] = spec.tolerance;
    if (spec.full && !a.extremal) {
      j["eigenvalues"] = spec.eigenvalues;
      j["residualNorms"] = spec.residualNorms;
    } else {
      j["eigenvalues"] = {lmin, lmax};
    }
    j["checks"] = nlohmann::json::array();
    for (const auto& ch : checks) {
      j["checks"].push_back({{"name", ch.name}, {"lhs", ch.lhs}, {"rhs", ch.rhs}, {"slack", ch.slack},
                             {"verdict", yesNo(ch.verdict)}});
    }
    writeText(c.json, j.dump(2) + "\n");
  }
  return allHold ? kExitOk : kExitFailed;
}

// complexity ----------------------------------------------------------------

struct ComplexityArgs {
  std::string family;
  std::string params;
  std::string windows;
  std::string thresholds = "auto";
  bool witness = false;
  std::optional<std::size_t> size;
};

int runComplexity(const ComplexityArgs& a, const Common& c) {
  if (a.windows.empty()) throw UsageError("complexity needs --windows");
  auto windows = parseList<std::size_t>(a.windows, "windows");
  std::optional<std::size_t> budget = a.size;
  if (!budget) budget = *std::max_element(windows.begin(), windows.end());
  const auto family = familyByName(a.family, parseParams(a.params), budget);
  if (family.budget()) {
    for (auto& w : windows) w = std::min(w, *family.budget());
  }
  std::vector<std::size_t> thresholds;
  if (a.thresholds != "auto") thresholds = parseList<std::size_t>(a.thresholds, "thresholds");

  const auto est = cLocEstimate(family, windows, thresholds);
  std::cout << "family " << family.name() << " (" << family.orderDescription() << ")\n";
  for (const auto& w : est.windows) {
    std::cout << "window " << w.windowSize << ": " << w.perVertex.size() << " interior vertices, max degree "
              << w.maxDegree << ", estimate ";
    if (w.estimate) {
      std::cout << formatDouble(*w.estimate) << " at t = " << w.estimateThreshold << "\n";
    } else {
      std::cout << "none\n";
    }
  }

  std::optional<SubComplexityResult> stars;
  if (a.witness) {
    stars = subComplexityWitness(family, windows);
    std::cout << "sub-complexity: " << toString(stars->verdict) << ", max star order " << stars->maxOrder << "\n";
  }

  const auto prov = c.provenance(a.family + "(" + a.params + ")");
  if (!c.csv.empty()) {
    CsvWriter csv(c.csv, prov, {"window", "t", "inf_ratio", "n_vertices_at_t"});
    for (const auto& w : est.windows) {
      for (const auto& cell : w.thresholdInfima) {
        csv.row({std::to_string(w.windowSize), std::to_string(cell.threshold),
                 cell.infRatio ? formatDouble(*cell.infRatio) : std::string(), std::to_string(cell.vertexCount)});
      }
    }
    if (stars) {
      csv.section({"window", "center", "star_order", "exact"});
      for (std::size_t i = 0; i < stars->witnesses.size(); ++i) {
        const auto& s = stars->witnesses[i];
        csv.row({std::to_string(stars->windows[i]), std::to_string(s.center), std::to_string(s.order),
                 s.exact ? "1" : "0"});
      }
    }
  }
  if (!c.json.empty()) {
    nlohmann::json j;
    j["provenance"] = {{"tool", prov.tool}, {"config", prov.configHash}, {"seed", prov.seed}, {"graph", prov.graphRef}};
    j["windows"] = nlohmann::json::array();
    for (const auto& w : est.windows) {
      nlohmann::json row = {{"window", w.windowSize}, {"maxDegree", w.maxDegree}, {"interiorOnly", w.interiorOnly}};
      if (w.estimate) row["estimate"] = *w.estimate;
      row["estimateThreshold"] = w.estimateThreshold;
      row["perVertex"] = nlohmann::json::array();
      for (const auto& v : w.perVertex) {
        row["perVertex"].push_back({{"vertex", v.vertex}, {"degree", v.degree}, {"triangles", v.triangles},
                                    {"ratio", v.ratio}});
      }
      j["windows"].push_back(row);
    }
    j["increments"] = est.increments;
    if (stars) {
      j["subComplexity"] = {{"verdict", toString(stars->verdict)}, {"maxOrder", stars->maxOrder}};
    }
    writeText(c.json, j.dump(2) + "\n");
  }
  return kExitOk;
}

// deficiency ----------------------------------------------------------------

struct DeficiencyArgs {
  std::string family;
  double alpha = 1.0;
  std::size_t window = 0;
  std::string f0 = "1,0";
  std::string nelsonWindows;
};

int runDeficiency(const DeficiencyArgs& a, const Common& c) {
  if (a.window == 0) throw UsageError("deficiency needs --window");
  const auto parts = parseList<double>(a.f0, "f0");
  if (parts.size() != 2) throw UsageError("--f0 takes re,im");
  const Complex start(parts[0], parts[1]);

  DeficiencySolution sol;
  std::size_t labelOffset = 0;
  std::optional<GraphFamily> family;
  if (a.family == "ftree") {
    sol = fTreeDeficiencyVector(a.alpha, a.window, start);
    family = fTree(a.alpha, 2 * a.window, true);
  } else if (a.family == "jacobi") {
    sol = jacobiDeficiencyVector(a.alpha, a.window, start);
    labelOffset = 1;
    family = jacobiChain(a.alpha, 2 * a.window);
  } else {
    throw UsageError("--family must be ftree or jacobi");
  }

  std::cout << "family " << a.family << ", alpha " << formatDouble(a.alpha) << ", window " << a.window << "\n";
  std::cout << "arithmetic " << (sol.exact ? "exact rational" : "floating point") << "\n";
  std::cout << "max residual " << formatDouble(sol.maxResidual()) << " (max |f| " << formatDouble(sol.maxAbs())
            << ")\n";
  std::cout << "partial l2 " << formatDouble(sol.partialL2.back()) << "\n";
  if (sol.cauchyIndex) {
    std::cout << "increments below " << formatDouble(sol.cauchyThreshold) << " beyond n = "
              << (*sol.cauchyIndex + labelOffset) << "\n";
  } else {
    std::cout << "increments not below " << formatDouble(sol.cauchyThreshold) << " at the end of the window\n";
  }
  const auto& fit = sol.tailDiagnostic;
  std::cout << "tail exponent of |f(n)|^2: " << formatDouble(fit.exponent) << " [" << formatDouble(fit.low) << ", "
            << formatDouble(fit.high) << "] over " << fit.points << " points\n";

  std::optional<NelsonHypothesisReport> nelson;
  if (!a.nelsonWindows.empty()) {
    const auto ws = parseList<std::size_t>(a.nelsonWindows, "windows");
    nelson = nelsonHypothesisCheck(*family, ws);
    for (const auto& w : nelson->windows) {
      std::cout << "nelson window " << w.window << ": sup degree gap " << formatDouble(w.supDegreeGap)
                << ", sup weight gap " << formatDouble(w.supWeightGap) << "\n";
    }
    std::cout << "degree gap " << (nelson->degreeBounded ? "stable" : "growing") << " (rate "
              << formatDouble(nelson->degreeGrowthRate) << "), weight gap "
              << (nelson->weightBounded ? "stable" : "growing") << " (rate " << formatDouble(nelson->weightGrowthRate)
              << ")\n";
  }

  const auto prov = c.provenance(a.family + "(alpha=" + formatDouble(a.alpha) + ")[" + std::to_string(a.window) + "]");
  if (!c.csv.empty()) {
    CsvWriter csv(c.csv, prov, {"n", "f_re", "f_im", "partial_l2", "residual"});
    for (std::size_t i = 0; i < sol.values.size(); ++i) {
      csv.row({std::to_string(i + labelOffset), formatDouble(sol.values[i].real()), formatDouble(sol.values[i].imag()),
               formatDouble(sol.partialL2[i]), sol.residuals[i] ? formatDouble(*sol.residuals[i]) : std::string()});
    }
  }
  if (!c.json.empty()) {
    nlohmann::json j;
    j["provenance"] = {{"tool", prov.tool}, {"config", prov.configHash}, {"seed", prov.seed}, {"graph", prov.graphRef}};
    j["exact"] = sol.exact;
    j["maxResidual"] = sol.maxResidual();
    j["partialL2"] = sol.partialL2.back();
    if (sol.cauchyIndex) j["cauchyIndex"] = *sol.cauchyIndex + labelOffset;
    j["tail"] = {{"exponent", fit.exponent}, {"low", fit.low}, {"high", fit.high}, {"points", fit.points}};
    if (nelson) {
      j["nelson"] = nlohmann::json::array();
      for (const auto& w : nelson->windows) {
        j["nelson"].push_back({{"window", w.window}, {"supDegreeGap", w.supDegreeGap}, {"supWeightGap", w.supWeightGap}});
      }
    }
    writeText(c.json, j.dump(2) + "\n");
  }
  return kExitOk;
}

// witness -------------------------------------------------------------------

struct WitnessArgs {
  std::string file;
  std::string subset;
  std::size_t exactCap = 20;
};

int runWitness(const WitnessArgs& a, const Common& c) {
  FiniteGraph g = importGraph(a.file);
  std::string ref = a.file;
  if (!a.subset.empty()) {
    g = inducedSubgraph(g, parseList<VertexId>(a.subset, "subset")).graph;
    ref += " subset{" + a.subset + "}";
  }
  if (g.edgeCount() == 0) throw UsageError("graph has no edges");
  Tolerances tol;
  if (c.tol) tol.iterativeResidual = tol.denseResidual = *c.tol;
  const double lmax = extremalSpectrum(adjacencyMatrix(g), tol).max();

  const auto prov = c.provenance(ref);
  std::optional<CsvWriter> csv;
  if (!c.csv.empty()) {
    csv.emplace(c.csv, prov, std::vector<std::string>{"vertex", "degree", "rayleigh", "lambda_max", "star_order", "exact"});
  }
  bool sound = true;
  double best = -std::numeric_limits<double>::infinity();
  std::size_t bestStar = 0;
  for (VertexId x = 0; x < g.vertexCount(); ++x) {
    if (g.degree(x) == 0) continue;
    const double w = rayleighWitness(g, x);
    const auto star = starOrderAt(g, x, a.exactCap);
    sound = sound && lessEqual("witness", w, lmax, tol).verdict;
    best = std::max(best, w);
    bestStar = std::max(bestStar, star.order);
    if (csv) {
      csv->row({std::to_string(x), std::to_string(g.degree(x)), formatDouble(w), formatDouble(lmax),
                std::to_string(star.order), star.exact ? "1" : "0"});
    }
  }
  std::cout << "graph " << ref << ": lambda_max " << formatDouble(lmax) << ", best Rayleigh witness "
            << formatDouble(best) << ", largest induced star " << bestStar << "\n";
  std::cout << (sound ? "all witnesses below lambda_max" : "witness above lambda_max") << "\n";
  return sound ? kExitOk : kExitFailed;
}

// verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string only;
  std::size_t randomGraphs = 200;
  std::size_t surgeryPlans = 50;
};

int runVerify(const VerifyArgs& a, const Common& c, bool seedGiven) {
  VerifyConfig cfg;
  if (seedGiven) cfg.seed = c.seed;
  cfg.randomGraphs = a.randomGraphs;
  cfg.surgeryPlans = a.surgeryPlans;
  if (c.tol) {
    if (!(*c.tol > 0)) throw UsageError("--tol must be positive");
    cfg.tol.iterativeResidual = *c.tol;
  }
  if (!a.only.empty()) {
    for (int id : parseList<int>(a.only, "criterion")) {
      if (id < 1 || id > kCriterionCount) throw UsageError("no criterion " + std::to_string(id));
      cfg.only.insert(id);
    }
  }
  const auto result = runVerifySuite(cfg);
  std::cout << verifyReportTable(result);
  if (!c.json.empty()) writeText(c.json, verifyReportJson(result));
  if (result.allPassed) return kExitOk;
  return result.anyNonConvergence ? kExitNoConvergence : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral toolkit for locally finite graphs"};
  app.set_version_flag("--version", std::string("locfin ") + toolVersion());
  app.require_subcommand(1);

  Common common;
  std::optional<std::uint64_t> seed;
  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Seed recorded in outputs (and used by random suites)");
    sub->add_option("--tol", common.tol, "Eigensolver residual tolerance");
    sub->add_option("--json", common.json, "Write a JSON report");
    sub->add_option("--csv", common.csv, "Write a CSV table");
  };

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Export a graph family truncation as JSON");
  generate->add_option("--family", gen.family, "complete|star|kkn|skn|wordtree|ftree|jacobi|surgery")->required();
  generate->add_option("--params", gen.params, "k=INT,n=INT,alpha=FLOAT,M=INT");
  generate->add_option("--size", gen.size, "Vertex count of the truncation");
  generate->add_option("--out", gen.out, "Output graph file (stdout if omitted)");
  generate->add_option("--plan", gen.plan, "Surgery plan JSON");
  addCommon(generate);

  SpectrumArgs spec;
  auto* spectrum = app.add_subcommand("spectrum", "Spectrum and bound checks of a graph file");
  spectrum->add_option("file", spec.file, "Graph JSON");
  spectrum->add_option("--method", spec.method, "dense|iter");
  spectrum->add_flag("--extremal", spec.extremal, "Report only lambda_min and lambda_max");
  spectrum->add_option("--check", spec.check, "estbd|witness|discriminant|surgery");
  spectrum->add_option("--subset", spec.subset, "Induced subgraph on these vertices");
  spectrum->add_option("--plan", spec.plan, "Surgery plan JSON (for --check surgery)");
  spectrum->add_option("--size", spec.size, "Truncation cap for surgery parts");
  addCommon(spectrum);

  ComplexityArgs cx;
  auto* complexity = app.add_subcommand("complexity", "Triangle/degree ratios and the local complexity estimate");
  complexity->add_option("--family", cx.family, "complete|star|kkn|skn|wordtree|ftree|jacobi")->required();
  complexity->add_option("--params", cx.params, "Family parameters");
  complexity->add_option("--windows", cx.windows, "Comma-separated window sizes")->required();
  complexity->add_option("--thresholds", cx.thresholds, "auto or comma-separated degree thresholds");
  complexity->add_flag("--witness", cx.witness, "Search induced star witnesses");
  complexity->add_option("--size", cx.size, "Vertex budget for infinite families");
  addCommon(complexity);

  DeficiencyArgs df;
  auto* deficiency = app.add_subcommand("deficiency", "Solve A* f = i f on the F-tree or Jacobi chain");
  deficiency->add_option("--family", df.family, "ftree|jacobi")->required();
  deficiency->add_option("--alpha", df.alpha, "Growth exponent")->required();
  deficiency->add_option("--window", df.window, "Window size")->required();
  deficiency->add_option("--f0", df.f0, "Starting value re,im");
  deficiency->add_option("--windows", df.nelsonWindows, "Also run the Nelson hypothesis check on these windows");
  addCommon(deficiency);

  WitnessArgs wt;
  auto* witness = app.add_subcommand("witness", "Rayleigh and induced-star witnesses per vertex");
  witness->add_option("file", wt.file, "Graph JSON")->required();
  witness->add_option("--subset", wt.subset, "Induced subgraph on these vertices");
  witness->add_option("--exact-cap", wt.exactCap, "Largest neighborhood solved exactly");
  addCommon(witness);

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--only", vf.only, "Comma-separated criterion ids");
  verify->add_option("--random-graphs", vf.randomGraphs, "Random graphs per property criterion");
  verify->add_option("--surgery-plans", vf.surgeryPlans, "Random surgery plans");
  addCommon(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (int i = 1; i < argc; ++i) common.invocation += std::string(argv[i]) + '\x1f';
  common.seed = seed.value_or(0);

  try {
    if (*generate) return runGenerate(gen, common);
    if (*spectrum) return runSpectrum(spec, common);
    if (*complexity) return runComplexity(cx, common);
    if (*deficiency) return runDeficiency(df, common);
    if (*witness) return runWitness(wt, common);
    if (*verify) return runVerify(vf, common, seed.has_value());
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

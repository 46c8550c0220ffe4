#include "locfin/io.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

namespace locfin {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> lineColumn(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parseStrict(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending token.
    const auto [line, column] = lineColumn(text, e.byte == 0 ? 0 : e.byte - 1);
    throw FormatError("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                          e.what(),
                      line, column);
  }
}

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void writeFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::size_t asIndex(const json& v, const std::string& what) {
  if (!v.is_number_unsigned()) throw FormatError(what + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

void rejectUnknownKeys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw FormatError("unknown key \"" + key + "\" in " + where);
  }
}

json provenanceJson(const Provenance& p) {
  json j;
  j["tool"] = p.tool;
  j["config"] = p.configHash;
  j["seed"] = p.seed;
  if (!p.graphRef.empty()) j["graph"] = p.graphRef;
  return j;
}

std::size_t integerParam(const std::map<std::string, double>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument("missing parameter " + key);
  const double v = it->second;
  if (!(v >= 0) || v != std::floor(v) || v > 1e15) {
    throw std::invalid_argument("parameter " + key + " must be a nonnegative integer");
  }
  return static_cast<std::size_t>(v);
}

double realParam(const std::map<std::string, double>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument("missing parameter " + key);
  return it->second;
}

void allowOnly(const std::map<std::string, double>& params, std::initializer_list<const char*> allowed,
               const std::string& family) {
  for (const auto& [key, value] : params) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw std::invalid_argument("unknown parameter " + key + " for family " + family);
  }
}

std::size_t requireSize(std::optional<std::size_t> size, const std::string& family) {
  if (!size) throw std::invalid_argument("family " + family + " is infinite and needs a size");
  return *size;
}

}  // namespace

const char* toolVersion() { return LOCFIN_VERSION; }

std::string configHash(std::string_view canonicalConfig) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonicalConfig) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string formatDouble(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string graphToJson(const FiniteGraph& g, const std::optional<Provenance>& prov) {
  // Hand-laid so that each edge sits on its own line; values go through json for escaping.
  std::ostringstream out;
  out << "{\n  \"vertexCount\": " << g.vertexCount();
  if (!g.labels().empty()) out << ",\n  \"labels\": " << json(g.labels()).dump();
  out << ",\n  \"edges\": [";
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << (i ? ",\n    " : "\n    ") << json::array({edges[i].u, edges[i].v, edges[i].weight}).dump();
  }
  out << (edges.empty() ? "]" : "\n  ]");
  if (prov) out << ",\n  \"provenance\": " << provenanceJson(*prov).dump();
  out << "\n}\n";
  return out.str();
}

FiniteGraph graphFromJson(std::string_view text) {
  const json j = parseStrict(text);
  if (!j.is_object()) throw FormatError("graph file must hold one JSON object");
  rejectUnknownKeys(j, {"vertexCount", "labels", "edges", "provenance"}, "graph");
  if (!j.contains("vertexCount")) throw FormatError("missing vertexCount");
  if (!j.contains("edges")) throw FormatError("missing edges");
  const std::size_t n = asIndex(j["vertexCount"], "vertexCount");

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw FormatError("labels must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw FormatError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != n) {
      throw FormatError("labels has " + std::to_string(labels.size()) + " entries for " + std::to_string(n) +
                        " vertices");
    }
  }

  const auto& raw = j["edges"];
  if (!raw.is_array()) throw FormatError("edges must be an array");
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const auto& e = raw[k];
    const std::string where = "edge #" + std::to_string(k);
    if (!e.is_array() || e.size() != 3) throw FormatError(where + " must be [i, j, w]");
    const std::size_t u = asIndex(e[0], where + " endpoint i");
    const std::size_t v = asIndex(e[1], where + " endpoint j");
    if (!e[2].is_number()) throw FormatError(where + " weight must be a number");
    const double w = e[2].get<double>();
    const std::string pair = "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
    if (u >= v) throw FormatError(where + " " + pair + " violates i < j");
    if (v >= n) throw FormatError(where + " " + pair + " has an endpoint outside 0.." + std::to_string(n - 1));
    if (!std::isfinite(w) || w < kMinEdgeWeight) {
      throw FormatError(where + " " + pair + " has weight " + formatDouble(w) + " below " + formatDouble(kMinEdgeWeight));
    }
    if (!seen.insert({u, v}).second) throw FormatError("duplicate edge " + pair);
    edges.push_back({u, v, w});
  }
  return FiniteGraph(n, std::move(edges), std::move(labels));
}

void exportGraph(const FiniteGraph& g, const std::filesystem::path& path, const Provenance& prov) {
  writeFile(path, graphToJson(g, prov));
}

FiniteGraph importGraph(const std::filesystem::path& path) { return graphFromJson(readFile(path)); }

CsvWriter::CsvWriter(const std::filesystem::path& path, const Provenance& prov,
                     const std::vector<std::string>& columns)
    : out_(path) {
  if (!out_) throw std::runtime_error("cannot write " + path.string());
  out_ << "# tool=" << prov.tool << " config=" << prov.configHash << " seed=" << prov.seed;
  if (!prov.graphRef.empty()) out_ << " graph=" << prov.graphRef;
  out_ << '\n';
  section(columns);
}

void CsvWriter::section(const std::vector<std::string>& columns) {
  width_ = columns.size();
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) {
    throw std::logic_error("CSV row has " + std::to_string(cells.size()) + " cells, header has " +
                           std::to_string(width_));
  }
  for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
  out_ << '\n';
  if (!out_) throw std::runtime_error("CSV write failed");
}

std::map<std::string, double> parseParams(std::string_view text) {
  std::map<std::string, double> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const auto item = text.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw std::invalid_argument("parameter \"" + std::string(item) + "\" is not key=value");
    }
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    double v = 0;
    auto res = std::from_chars(value.data(), value.data() + value.size(), v);
    if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
      throw std::invalid_argument("parameter " + key + " has non-numeric value \"" + value + "\"");
    }
    if (!out.emplace(key, v).second) throw std::invalid_argument("parameter " + key + " given twice");
    pos = comma + 1;
  }
  return out;
}

GraphFamily familyByName(const std::string& name, const std::map<std::string, double>& params,
                         std::optional<std::size_t> size) {
  if (name == "complete") {
    allowOnly(params, {"n"}, name);
    return completeGraph(integerParam(params, "n"));
  }
  if (name == "star") {
    allowOnly(params, {"n"}, name);
    return starGraph(integerParam(params, "n"));
  }
  if (name == "kkn") {
    allowOnly(params, {"k", "n"}, name);
    return hubOfCliques(integerParam(params, "k"), integerParam(params, "n"));
  }
  if (name == "skn") {
    allowOnly(params, {"alpha"}, name);
    return chainedStarCliques(integerParam(params, "alpha"));
  }
  if (name == "wordtree") {
    allowOnly(params, {"M", "depth"}, name);
    const auto m = integerParam(params, "M");
    std::size_t depth = 0;
    if (params.count("depth")) {
      depth = integerParam(params, "depth");
    } else {
      const auto want = requireSize(size, name);
      while (wordTreeVertexCount(m, depth) < want) ++depth;
    }
    return wordTree(m, depth);
  }
  if (name == "ftree") {
    allowOnly(params, {"alpha", "connected"}, name);
    const bool connected = params.count("connected") && integerParam(params, "connected") != 0;
    const auto n = requireSize(size, name);
    if (n == 0) throw std::invalid_argument("ftree size must be positive");
    return fTree(realParam(params, "alpha"), n - 1, connected);
  }
  if (name == "jacobi") {
    allowOnly(params, {"alpha"}, name);
    return jacobiChain(realParam(params, "alpha"), requireSize(size, name));
  }
  throw std::invalid_argument("unknown family \"" + name + "\"");
}

SurgeryPlan surgeryPlanFromJson(std::string_view text) {
  const json j = parseStrict(text);
  if (!j.is_object()) throw FormatError("surgery plan must be a JSON object");
  rejectUnknownKeys(j, {"parts", "crossEdges", "rowBound", "provenance"}, "surgery plan");
  if (!j.contains("parts") || !j["parts"].is_array()) throw FormatError("surgery plan needs a parts array");

  SurgeryPlan plan;
  for (std::size_t k = 0; k < j["parts"].size(); ++k) {
    const auto& p = j["parts"][k];
    const std::string where = "part #" + std::to_string(k);
    if (!p.is_object()) throw FormatError(where + " must be an object");
    rejectUnknownKeys(p, {"family", "params", "size", "anchor"}, where);
    if (!p.contains("family") || !p["family"].is_string()) throw FormatError(where + " needs a family name");
    std::map<std::string, double> params;
    if (p.contains("params")) {
      if (!p["params"].is_object()) throw FormatError(where + " params must be an object");
      for (const auto& [key, value] : p["params"].items()) {
        if (!value.is_number()) throw FormatError(where + " parameter " + key + " must be a number");
        params[key] = value.get<double>();
      }
    }
    std::optional<std::size_t> size;
    if (p.contains("size")) size = asIndex(p["size"], where + " size");
    const VertexId anchor = p.contains("anchor") ? asIndex(p["anchor"], where + " anchor") : 0;
    try {
      plan.parts.push_back({familyByName(p["family"].get<std::string>(), params, size), anchor});
    } catch (const std::invalid_argument& e) {
      throw FormatError(where + ": " + e.what());
    }
  }

  if (j.contains("crossEdges")) {
    const auto& raw = j["crossEdges"];
    if (!raw.is_array()) throw FormatError("crossEdges must be an array");
    for (std::size_t k = 0; k < raw.size(); ++k) {
      const auto& e = raw[k];
      const std::string where = "cross edge #" + std::to_string(k);
      if (!e.is_array() || (e.size() != 2 && e.size() != 3)) throw FormatError(where + " must be [from, to(, w)]");
      CrossEdge c;
      c.from = asIndex(e[0], where + " from");
      c.to = asIndex(e[1], where + " to");
      if (e.size() == 3) {
        if (!e[2].is_number()) throw FormatError(where + " weight must be a number");
        c.weight = e[2].get<double>();
      }
      plan.crossEdges.push_back(c);
    }
  }
  if (j.contains("rowBound")) {
    if (!j["rowBound"].is_number()) throw FormatError("rowBound must be a number");
    plan.rowBound = j["rowBound"].get<double>();
  }
  return plan;
}

SurgeryPlan loadSurgeryPlan(const std::filesystem::path& path) { return surgeryPlanFromJson(readFile(path)); }

}  // namespace locfin

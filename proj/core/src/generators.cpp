#include "locfin/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

namespace locfin {

namespace {

std::vector<Neighbor> rangeNeighbors(VertexId begin, VertexId end, VertexId skip, VertexId bound) {
  std::vector<Neighbor> out;
  end = std::min(end, bound);
  for (VertexId y = begin; y < end; ++y) {
    if (y != skip) out.push_back({y, 1.0});
  }
  return out;
}

}  // namespace

GraphFamily completeGraph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  GraphFamily::Definition def;
  def.name = "complete";
  def.params = {{"n", static_cast<double>(n)}};
  def.size = n;
  def.order = "vertex id";
  def.neighborsBelow = [n](VertexId x, VertexId bound) { return rangeNeighbors(0, n, x, bound); };
  def.degree = [n](VertexId) { return n - 1; };
  def.maxIncidentWeight = [n](VertexId) { return n > 1 ? 1.0 : 0.0; };
  return GraphFamily(std::move(def));
}

GraphFamily starGraph(std::size_t n) {
  if (n < 2) throw std::invalid_argument("star graph needs order n >= 2");
  GraphFamily::Definition def;
  def.name = "star";
  def.params = {{"n", static_cast<double>(n)}};
  def.size = n;
  def.order = "hub 0, then leaves";
  def.neighborsBelow = [n](VertexId x, VertexId bound) {
    return x == 0 ? rangeNeighbors(1, n, 0, bound) : rangeNeighbors(0, 1, x, bound);
  };
  def.degree = [n](VertexId x) { return x == 0 ? n - 1 : std::size_t{1}; };
  def.maxIncidentWeight = [](VertexId) { return 1.0; };
  def.label = [](VertexId x) { return x == 0 ? std::string("hub") : std::to_string(x); };
  return GraphFamily(std::move(def));
}

GraphFamily hubOfCliques(std::size_t k, std::size_t n) {
  if (k < 1 || n < 1) throw std::invalid_argument("K_{k,n} needs k >= 1 and n >= 1");
  const std::size_t size = 1 + k * n;
  GraphFamily::Definition def;
  def.name = "kkn";
  def.params = {{"k", static_cast<double>(k)}, {"n", static_cast<double>(n)}};
  def.size = size;
  def.order = "hub 0, then the k clique copies one after another";
  def.neighborsBelow = [n, size](VertexId x, VertexId bound) {
    if (x == 0) return rangeNeighbors(1, size, 0, bound);
    const VertexId copyBegin = 1 + ((x - 1) / n) * n;
    auto out = rangeNeighbors(0, 1, x, bound);
    auto clique = rangeNeighbors(copyBegin, copyBegin + n, x, bound);
    out.insert(out.end(), clique.begin(), clique.end());
    return out;
  };
  def.degree = [k, n](VertexId x) { return x == 0 ? k * n : n; };
  def.maxIncidentWeight = [](VertexId) { return 1.0; };
  def.label = [n](VertexId x) {
    if (x == 0) return std::string("hub");
    return "c" + std::to_string((x - 1) / n) + "." + std::to_string((x - 1) % n);
  };
  return GraphFamily(std::move(def));
}

std::size_t chainedStarPrefixSize(std::size_t alpha, std::size_t block) {
  return block + (alpha + 1) * block * (block + 1) / 2;
}

VertexId chainedStarHub(std::size_t alpha, std::size_t block) {
  if (block < 1) throw std::domain_error("chained star blocks start at 1");
  return chainedStarPrefixSize(alpha, block - 1);
}

GraphFamily chainedStarCliques(std::size_t alpha) {
  if (alpha < 1) throw std::invalid_argument("chained star cliques need an integer alpha >= 1");

  // Block b holding vertex x, from the prefix sizes.
  auto blockOf = [alpha](VertexId x) {
    const double a = static_cast<double>(alpha + 1);
    auto b = static_cast<std::size_t>(std::sqrt(2.0 * static_cast<double>(x) / a));
    b = std::max<std::size_t>(b, 1);
    while (b > 1 && chainedStarPrefixSize(alpha, b - 1) > x) --b;
    while (chainedStarPrefixSize(alpha, b) <= x) ++b;
    return b;
  };

  GraphFamily::Definition def;
  def.name = "skn";
  def.params = {{"alpha", static_cast<double>(alpha)}};
  def.order = "blocks b = 1, 2, ...; hub x_b, then alpha*b leaves, then the b clique vertices";
  def.neighborsBelow = [alpha, blockOf](VertexId x, VertexId bound) {
    const std::size_t b = blockOf(x);
    const VertexId hub = chainedStarHub(alpha, b);
    const std::size_t leaves = alpha * b;
    const VertexId cliqueBegin = hub + 1 + leaves;
    const VertexId blockEnd = cliqueBegin + b;
    std::vector<Neighbor> out;
    if (x == hub) {
      if (b >= 2 && chainedStarHub(alpha, b - 1) < bound) out.push_back({chainedStarHub(alpha, b - 1), 1.0});
      auto inner = rangeNeighbors(hub + 1, blockEnd, x, bound);
      out.insert(out.end(), inner.begin(), inner.end());
      if (blockEnd < bound) out.push_back({blockEnd, 1.0});
    } else if (x < cliqueBegin) {
      if (hub < bound) out.push_back({hub, 1.0});
    } else {
      if (hub < bound) out.push_back({hub, 1.0});
      auto clique = rangeNeighbors(cliqueBegin, blockEnd, x, bound);
      out.insert(out.end(), clique.begin(), clique.end());
    }
    return out;
  };
  def.degree = [alpha, blockOf](VertexId x) -> std::size_t {
    const std::size_t b = blockOf(x);
    const VertexId hub = chainedStarHub(alpha, b);
    if (x == hub) return (alpha + 1) * b + (b >= 2 ? 2 : 1);
    if (x < hub + 1 + alpha * b) return 1;
    return b;
  };
  def.maxIncidentWeight = [](VertexId) { return 1.0; };
  def.label = [alpha, blockOf](VertexId x) {
    const std::size_t b = blockOf(x);
    const VertexId hub = chainedStarHub(alpha, b);
    if (x == hub) return "x_" + std::to_string(b);
    return "x_" + std::to_string(b) + "," + std::to_string(x - hub);
  };
  return GraphFamily(std::move(def));
}

namespace {

struct WordLevels {
  std::size_t increment;
  // levelStart[K] = number of words shorter than K; levelSize[K] = number of words of length K.
  std::vector<std::uint64_t> levelStart;
  std::vector<std::uint64_t> levelSize;

  WordLevels(std::size_t m, std::size_t levels) : increment(m) {
    std::uint64_t size = 1;
    std::uint64_t start = 0;
    for (std::size_t k = 0; k < levels; ++k) {
      if (k > 0 && __builtin_mul_overflow(size, static_cast<std::uint64_t>(k * m), &size)) {
        throw std::overflow_error("word tree level " + std::to_string(k) + " does not fit in 64-bit ids");
      }
      levelStart.push_back(start);
      levelSize.push_back(size);
      if (__builtin_add_overflow(start, size, &start)) {
        throw std::overflow_error("word tree level " + std::to_string(k) + " does not fit in 64-bit ids");
      }
    }
  }

  std::size_t levelOf(VertexId x) const {
    auto it = std::upper_bound(levelStart.begin(), levelStart.end(), static_cast<std::uint64_t>(x));
    auto k = static_cast<std::size_t>(it - levelStart.begin()) - 1;
    if (k + 1 >= levelStart.size()) throw std::domain_error("word tree vertex " + std::to_string(x) + " beyond the generated levels");
    return k;
  }
};

}  // namespace

std::uint64_t wordTreeVertexCount(std::size_t increment, std::size_t maxLen) {
  WordLevels levels(increment, maxLen + 2);
  return levels.levelStart[maxLen + 1];
}

GraphFamily wordTree(std::size_t increment, std::size_t maxLen) {
  if (increment < 1 || maxLen < 1) throw std::invalid_argument("word tree needs M >= 1 and maxLen >= 1");
  // Two extra levels so that words of length maxLen + 1 still know their children's ids.
  auto levels = std::make_shared<const WordLevels>(increment, maxLen + 3);

  GraphFamily::Definition def;
  def.name = "wordtree";
  def.params = {{"M", static_cast<double>(increment)}, {"maxLen", static_cast<double>(maxLen)}};
  def.budget = levels->levelStart[maxLen + 1];
  def.order = "by word length, then lexicographic";
  def.neighborsBelow = [levels](VertexId x, VertexId bound) {
    const std::size_t k = levels->levelOf(x);
    const std::uint64_t rank = x - levels->levelStart[k];
    std::vector<Neighbor> out;
    if (k >= 1) {
      const VertexId parent = levels->levelStart[k - 1] + rank / (k * levels->increment);
      if (parent < bound) out.push_back({parent, 1.0});
    }
    const std::uint64_t fanout = (k + 1) * levels->increment;
    const VertexId first = levels->levelStart[k + 1] + rank * fanout;
    auto children = rangeNeighbors(first, first + fanout, first + fanout, bound);
    out.insert(out.end(), children.begin(), children.end());
    return out;
  };
  def.degree = [levels](VertexId x) -> std::size_t {
    const std::size_t k = levels->levelOf(x);
    return (k + 1) * levels->increment + (k >= 1 ? 1 : 0);
  };
  def.maxIncidentWeight = [](VertexId) { return 1.0; };
  def.label = [levels](VertexId x) {
    const std::size_t k = levels->levelOf(x);
    if (k == 0) return std::string("()");
    std::uint64_t rank = x - levels->levelStart[k];
    std::vector<std::uint64_t> letters(k);
    for (std::size_t j = k; j >= 1; --j) {
      const std::uint64_t radix = j * levels->increment;
      letters[j - 1] = rank % radix;
      rank /= radix;
    }
    std::string out;
    for (std::size_t j = 0; j < k; ++j) out += (j ? "." : "") + std::to_string(letters[j]);
    return out;
  };
  return GraphFamily(std::move(def));
}

FTreeShape::FTreeShape(double alpha) : alpha_(alpha), integerExponent_(0) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("F-tree needs alpha > 0");
  const double exponent = alpha + 2.0;
  if (std::abs(exponent - std::round(exponent)) < 1e-12) integerExponent_ = static_cast<int>(std::round(exponent));
}

long double FTreeShape::growth(long double x) const {
  return std::pow(x + 1.0L, static_cast<long double>(alpha_) + 2.0L);
}

std::uint64_t FTreeShape::childrenBegin(std::uint64_t n) const {
  if (integerExponent_ > 0) {
    __extension__ using U128 = unsigned __int128;
    U128 value = 1;
    for (int i = 0; i < integerExponent_; ++i) {
      value *= static_cast<U128>(n) + 1;
      if (value > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("F-tree interval bound overflows 64 bits");
    }
    return static_cast<std::uint64_t>(value);
  }
  const long double value = growth(static_cast<long double>(n));
  if (value >= 1.8e19L) throw std::overflow_error("F-tree interval bound overflows 64 bits");
  const long double nearest = std::round(value);
  // Values within rounding noise of an integer are that integer.
  if (std::abs(value - nearest) <= 1e-12L * std::max(1.0L, value)) return static_cast<std::uint64_t>(nearest);
  return static_cast<std::uint64_t>(std::ceil(value));
}

std::uint64_t FTreeShape::parentOf(std::uint64_t n) const {
  if (n == 0) throw std::domain_error("vertex 0 of the F-tree has no parent");
  const long double root = std::pow(static_cast<long double>(n), 1.0L / (static_cast<long double>(alpha_) + 2.0L));
  std::uint64_t p = root >= 1.0L ? static_cast<std::uint64_t>(root) - 1 : 0;
  while (p > 0 && childrenBegin(p) > n) --p;
  while (childrenBegin(p + 1) <= n) ++p;
  return p;
}

GraphFamily fTree(double alpha, std::size_t maxVertex, bool connected) {
  FTreeShape shape(alpha);
  if (maxVertex < shape.childrenBegin(1)) {
    throw std::invalid_argument("F-tree window must reach F(1) = " + std::to_string(shape.childrenBegin(1)));
  }
  GraphFamily::Definition def;
  def.name = "ftree";
  def.params = {{"alpha", alpha}, {"maxVertex", static_cast<double>(maxVertex)}, {"connected", connected ? 1.0 : 0.0}};
  def.budget = maxVertex + 1;
  def.order = "integer order";
  def.neighborsBelow = [shape, connected](VertexId x, VertexId bound) {
    std::vector<Neighbor> out;
    if (x >= 1 && shape.parentOf(x) < bound) out.push_back({shape.parentOf(x), 1.0});
    if (connected && x >= 2 && x - 1 < bound) out.push_back({x - 1, 1.0});
    if (connected && x >= 1 && x + 1 < bound) out.push_back({x + 1, 1.0});
    auto children = rangeNeighbors(shape.childrenBegin(x), shape.childrenEnd(x), x, bound);
    out.insert(out.end(), children.begin(), children.end());
    std::sort(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
    return out;
  };
  def.degree = [shape, connected](VertexId x) -> std::size_t {
    std::size_t d = shape.treeDegree(x);
    if (connected) d += (x >= 1 ? 1 : 0) + (x >= 2 ? 1 : 0);
    return d;
  };
  def.maxIncidentWeight = [](VertexId) { return 1.0; };
  return GraphFamily(std::move(def));
}

GraphFamily jacobiChain(double alpha, std::size_t length) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("Jacobi chain needs alpha > 0");
  if (length < 2) throw std::invalid_argument("Jacobi chain needs length >= 2");
  auto weight = [alpha](VertexId n) { return std::pow(static_cast<double>(n), 1.0 + alpha); };
  GraphFamily::Definition def;
  def.name = "jacobi";
  def.params = {{"alpha", alpha}, {"length", static_cast<double>(length)}};
  def.budget = length;
  def.order = "index order, id i is n = i + 1";
  def.neighborsBelow = [weight](VertexId x, VertexId bound) {
    std::vector<Neighbor> out;
    if (x >= 1 && x - 1 < bound) out.push_back({x - 1, weight(x)});
    if (x + 1 < bound) out.push_back({x + 1, weight(x + 1)});
    return out;
  };
  def.degree = [](VertexId x) -> std::size_t { return x == 0 ? 1 : 2; };
  def.maxIncidentWeight = [weight](VertexId x) { return weight(x + 1); };
  def.label = [](VertexId x) { return std::to_string(x + 1); };
  return GraphFamily(std::move(def));
}

VertexId disjointStarHub(std::size_t order) {
  if (order < 2) throw std::domain_error("disjoint stars start at S_2");
  return order * (order - 1) / 2 - 1;
}

GraphFamily disjointStars() {
  auto orderOf = [](VertexId x) {
    auto n = static_cast<std::size_t>(std::sqrt(2.0 * static_cast<double>(x + 1)));
    n = std::max<std::size_t>(n, 2);
    while (n > 2 && disjointStarHub(n) > x) --n;
    while (disjointStarHub(n + 1) <= x) ++n;
    return n;
  };
  GraphFamily::Definition def;
  def.name = "stars";
  def.order = "stars S_2, S_3, ... one after another, hub first";
  def.neighborsBelow = [orderOf](VertexId x, VertexId bound) {
    const std::size_t n = orderOf(x);
    const VertexId hub = disjointStarHub(n);
    if (x == hub) return rangeNeighbors(hub + 1, hub + n, x, bound);
    return rangeNeighbors(hub, hub + 1, x, bound);
  };
  def.degree = [orderOf](VertexId x) -> std::size_t {
    const std::size_t n = orderOf(x);
    return x == disjointStarHub(n) ? n - 1 : 1;
  };
  def.maxIncidentWeight = [](VertexId) { return 1.0; };
  return GraphFamily(std::move(def));
}

SurgeryResult surgery(const SurgeryPlan& plan, std::size_t sizeCap) {
  if (plan.parts.empty()) throw std::invalid_argument("surgery plan has no parts");
  if (!(plan.rowBound > 0.0)) throw std::invalid_argument("surgery row bound M must be positive");

  SurgeryResult result;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::size_t offset = 0;
  for (std::size_t p = 0; p < plan.parts.size(); ++p) {
    const auto& part = plan.parts[p];
    std::size_t n = sizeCap;
    if (part.family.budget()) n = std::min(n, *part.family.budget());
    if (part.anchor >= n) {
      throw std::invalid_argument("anchor " + std::to_string(part.anchor) + " of part " + std::to_string(p) +
                                  " lies outside its truncation of " + std::to_string(n) + " vertices");
    }
    auto t = truncate(part.family, n);
    for (const auto& e : t.graph.edges()) edges.push_back({e.u + offset, e.v + offset, e.weight});
    for (VertexId x = 0; x < n; ++x) labels.push_back(std::to_string(p) + ":" + t.graph.label(x));
    result.partOffsets.push_back(offset);
    result.anchors.push_back(offset + part.anchor);
    offset += n;
  }

  std::vector<double> rowSum(plan.parts.size(), 0.0);
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  std::vector<Edge> cross;
  for (const auto& c : plan.crossEdges) {
    if (c.from >= plan.parts.size() || c.to >= plan.parts.size()) {
      throw std::invalid_argument("cross edge (" + std::to_string(c.from) + ", " + std::to_string(c.to) +
                                  ") names a missing part");
    }
    if (c.from == c.to) throw std::invalid_argument("cross edge joins part " + std::to_string(c.from) + " to itself");
    if (!(c.weight >= kMinEdgeWeight)) throw std::invalid_argument("cross edge weights must be positive");
    const std::pair<std::size_t, std::size_t> key = std::minmax(c.from, c.to);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      throw std::invalid_argument("duplicate cross edge between parts " + std::to_string(key.first) + " and " +
                                  std::to_string(key.second));
    }
    seen.push_back(key);
    rowSum[c.from] += c.weight;
    rowSum[c.to] += c.weight;
    result.maxCrossWeight = std::max(result.maxCrossWeight, c.weight);
    cross.push_back({result.anchors[c.from], result.anchors[c.to], c.weight});
  }
  for (std::size_t p = 0; p < rowSum.size(); ++p) {
    if (rowSum[p] > plan.rowBound * (1.0 + 1e-12)) {
      throw std::invalid_argument("anchor of part " + std::to_string(p) + " (vertex " +
                                  std::to_string(result.anchors[p]) + ") has cross row sum " +
                                  std::to_string(rowSum[p]) + " > M = " + std::to_string(plan.rowBound));
    }
  }

  result.disjoint = FiniteGraph(offset, edges, labels);
  edges.insert(edges.end(), cross.begin(), cross.end());
  result.glued = FiniteGraph(offset, std::move(edges), std::move(labels));
  return result;
}

SurgeryPlan hubChainPlan(std::size_t k, std::size_t parts) {
  if (parts < 1) throw std::invalid_argument("hub chain plan needs at least one part");
  SurgeryPlan plan;
  plan.rowBound = 2.0;
  for (std::size_t n = 1; n <= parts; ++n) plan.parts.push_back({hubOfCliques(k, n), 0});
  for (std::size_t p = 0; p + 1 < parts; ++p) plan.crossEdges.push_back({p, p + 1, 1.0});
  return plan;
}

}  // namespace locfin

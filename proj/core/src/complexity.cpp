#include "locfin/complexity.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace locfin {

double ratio(const FiniteGraph& g, VertexId x) {
  const auto d = g.degree(x);
  if (d == 0) throw std::domain_error("ratio undefined at isolated vertex " + std::to_string(x));
  return static_cast<double>(g.triangleCount(x)) / (static_cast<double>(d) * static_cast<double>(d));
}

ComplexityReport complexityReport(const Truncation& t, std::span<const std::size_t> thresholds, bool interiorOnly) {
  ComplexityReport report;
  report.windowSize = t.order;
  report.interiorOnly = interiorOnly;
  for (VertexId x = 0; x < t.graph.vertexCount(); ++x) {
    if (interiorOnly && !t.interior[x]) continue;
    const auto d = t.graph.degree(x);
    if (d == 0) continue;
    const auto n = t.graph.triangleCount(x);
    report.perVertex.push_back({x, d, n, static_cast<double>(n) / (static_cast<double>(d) * static_cast<double>(d))});
    report.maxDegree = std::max(report.maxDegree, d);
  }

  std::vector<std::size_t> sweep(thresholds.begin(), thresholds.end());
  if (sweep.empty()) {
    for (const auto& v : report.perVertex) sweep.push_back(v.degree);
  }
  std::sort(sweep.begin(), sweep.end());
  sweep.erase(std::unique(sweep.begin(), sweep.end()), sweep.end());

  // Sort by degree descending and sweep thresholds from the top with a running minimum.
  std::vector<const VertexRatio*> byDegree;
  for (const auto& v : report.perVertex) byDegree.push_back(&v);
  std::sort(byDegree.begin(), byDegree.end(), [](auto* a, auto* b) { return a->degree > b->degree; });
  report.thresholdInfima.resize(sweep.size());
  std::size_t next = 0;
  double running = std::numeric_limits<double>::infinity();
  for (std::size_t i = sweep.size(); i-- > 0;) {
    while (next < byDegree.size() && byDegree[next]->degree >= sweep[i]) {
      running = std::min(running, byDegree[next]->ratio);
      ++next;
    }
    auto& cell = report.thresholdInfima[i];
    cell.threshold = sweep[i];
    cell.vertexCount = next;
    if (next > 0) cell.infRatio = running;
  }

  const std::size_t half = (report.maxDegree + 1) / 2;
  for (const auto& cell : report.thresholdInfima) {
    if (cell.threshold <= half && cell.infRatio) {
      report.estimate = cell.infRatio;
      report.estimateThreshold = cell.threshold;
    }
  }
  return report;
}

ComplexityEstimate cLocEstimate(const GraphFamily& family, std::span<const std::size_t> windows,
                                std::span<const std::size_t> thresholds) {
  ComplexityEstimate out;
  std::optional<double> previous;
  for (auto w : windows) {
    auto report = complexityReport(truncate(family, w), thresholds, true);
    if (!out.windows.empty() && report.maxDegree > out.windows.back().maxDegree) out.degreeGrows = true;
    if (report.estimate) {
      if (previous) out.increments.push_back(std::abs(*report.estimate - *previous));
      previous = report.estimate;
    }
    out.windows.push_back(std::move(report));
  }
  if (!out.windows.empty()) out.estimate = out.windows.back().estimate;
  return out;
}

namespace {

// Dense bitset adjacency of the neighborhood graph of one vertex.
class LocalGraph {
public:
  LocalGraph(const FiniteGraph& g, VertexId x) {
    for (const auto& nb : g.neighbors(x)) {
      if (nb.id != x) vertices_.push_back(nb.id);
    }
    const std::size_t n = vertices_.size();
    words_ = (n + 63) / 64;
    bits_.assign(n * words_, 0);
    for (std::size_t i = 0; i < n; ++i) {
      // Merge the sorted neighbor list of vertices_[i] with the sorted vertices_.
      auto nbs = g.neighbors(vertices_[i]);
      std::size_t j = 0;
      for (const auto& nb : nbs) {
        while (j < n && vertices_[j] < nb.id) ++j;
        if (j < n && vertices_[j] == nb.id && j != i) set(i, j);
      }
    }
  }

  std::size_t size() const { return vertices_.size(); }
  VertexId vertex(std::size_t i) const { return vertices_[i]; }
  bool adjacent(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }
  std::size_t degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(__builtin_popcountll(bits_[i * words_ + w]));
    return d;
  }

private:
  void set(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
  }

  std::vector<VertexId> vertices_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Exact maximum independent set for at most 64 vertices.
class ExactMis {
public:
  explicit ExactMis(const LocalGraph& local) : n_(local.size()), adj_(n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (local.adjacent(i, j)) adj_[i] |= std::uint64_t{1} << j;
      }
    }
  }

  std::uint64_t solve() {
    const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    search(all, 0);
    return best_;
  }

private:
  void search(std::uint64_t candidates, std::uint64_t chosen) {
    const int have = __builtin_popcountll(chosen);
    if (have + __builtin_popcountll(candidates) <= __builtin_popcountll(best_)) return;
    if (candidates == 0) {
      best_ = chosen;
      return;
    }
    // Vertices with no remaining neighbors are always taken.
    std::uint64_t forced = 0;
    for (std::uint64_t rest = candidates; rest; rest &= rest - 1) {
      const int v = __builtin_ctzll(rest);
      if ((adj_[v] & candidates) == 0) forced |= std::uint64_t{1} << v;
    }
    if (forced) {
      search(candidates & ~forced, chosen | forced);
      return;
    }
    // Branch on the candidate of largest remaining degree.
    int pick = -1;
    int pickDegree = -1;
    for (std::uint64_t rest = candidates; rest; rest &= rest - 1) {
      const int v = __builtin_ctzll(rest);
      const int d = __builtin_popcountll(adj_[v] & candidates);
      if (d > pickDegree) {
        pick = v;
        pickDegree = d;
      }
    }
    const std::uint64_t bit = std::uint64_t{1} << pick;
    search(candidates & ~bit & ~adj_[pick], chosen | bit);
    search(candidates & ~bit, chosen);
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::uint64_t best_ = 0;
};

std::vector<std::size_t> greedyMis(const LocalGraph& local) {
  const std::size_t n = local.size();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> degree(n);
  for (std::size_t i = 0; i < n; ++i) degree[i] = local.degree(i);
  std::vector<std::size_t> chosen;
  std::size_t remaining = n;
  while (remaining > 0) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (alive[i] && (pick == n || degree[i] < degree[pick])) pick = i;
    }
    chosen.push_back(pick);
    std::vector<std::size_t> removed = {pick};
    for (std::size_t j = 0; j < n; ++j) {
      if (alive[j] && local.adjacent(pick, j)) removed.push_back(j);
    }
    for (auto r : removed) {
      alive[r] = false;
      --remaining;
    }
    for (auto r : removed) {
      for (std::size_t j = 0; j < n; ++j) {
        if (alive[j] && local.adjacent(r, j)) --degree[j];
      }
    }
  }

  // 1-for-2 swaps: drop one chosen vertex, add two free vertices that only conflicted with it.
  bool improved = true;
  while (improved) {
    improved = false;
    std::vector<std::size_t> conflicts(n, 0);
    std::vector<bool> inSet(n, false);
    for (auto c : chosen) inSet[c] = true;
    for (std::size_t j = 0; j < n; ++j) {
      for (auto c : chosen) {
        if (local.adjacent(c, j)) ++conflicts[j];
      }
    }
    for (std::size_t ci = 0; ci < chosen.size() && !improved; ++ci) {
      const auto c = chosen[ci];
      std::vector<std::size_t> free;
      for (std::size_t j = 0; j < n; ++j) {
        if (!inSet[j] && conflicts[j] == 1 && local.adjacent(c, j)) free.push_back(j);
      }
      for (std::size_t a = 0; a < free.size() && !improved; ++a) {
        for (std::size_t b = a + 1; b < free.size(); ++b) {
          if (!local.adjacent(free[a], free[b])) {
            chosen[ci] = free[a];
            chosen.push_back(free[b]);
            improved = true;
            break;
          }
        }
      }
    }
  }
  return chosen;
}

}  // namespace

StarWitness starOrderAt(const FiniteGraph& g, VertexId x, std::size_t exactCap) {
  const LocalGraph local(g, x);
  StarWitness w;
  w.center = x;
  std::vector<std::size_t> picked;
  if (local.size() <= std::min<std::size_t>(exactCap, 64)) {
    const auto mask = ExactMis(local).solve();
    for (std::size_t i = 0; i < local.size(); ++i) {
      if ((mask >> i) & 1U) picked.push_back(i);
    }
    w.exact = true;
  } else {
    picked = greedyMis(local);
    w.exact = false;
  }
  for (auto i : picked) w.leaves.push_back(local.vertex(i));
  std::sort(w.leaves.begin(), w.leaves.end());
  w.order = w.leaves.size() + 1;
  return w;
}

const char* toString(SubComplexityVerdict v) {
  switch (v) {
    case SubComplexityVerdict::ZeroWitness:
      return "zeroWitness";
    case SubComplexityVerdict::BoundedStars:
      return "boundedStars";
    case SubComplexityVerdict::NoWitnessFound:
      break;
  }
  return "noWitnessFound";
}

SubComplexityResult subComplexityWitness(const GraphFamily& family, std::span<const std::size_t> windows,
                                         std::size_t candidates, std::size_t exactCap) {
  SubComplexityResult out;
  for (auto w : windows) {
    if (family.budget()) w = std::min(w, *family.budget());
    const auto t = truncate(family, w);
    std::vector<VertexId> pool;
    for (VertexId x = 0; x < t.graph.vertexCount(); ++x) {
      if (t.interior[x] && t.graph.degree(x) > 0) pool.push_back(x);
    }
    std::stable_sort(pool.begin(), pool.end(),
                     [&](VertexId a, VertexId b) { return t.graph.degree(a) > t.graph.degree(b); });
    if (pool.size() > candidates) pool.resize(candidates);

    StarWitness best;
    best.order = 0;
    for (auto x : pool) {
      auto s = starOrderAt(t.graph, x, exactCap);
      if (s.order > best.order) best = std::move(s);
    }
    out.windows.push_back(w);
    out.maxOrder = std::max(out.maxOrder, best.order);
    out.witnesses.push_back(std::move(best));
  }

  if (out.witnesses.empty() || out.maxOrder == 0) {
    out.verdict = SubComplexityVerdict::NoWitnessFound;
    return out;
  }
  bool increasing = out.witnesses.size() >= 2;
  bool constant = true;
  for (std::size_t i = 1; i < out.witnesses.size(); ++i) {
    if (out.witnesses[i].order <= out.witnesses[i - 1].order) increasing = false;
    if (out.witnesses[i].order != out.witnesses[0].order) constant = false;
  }
  if (increasing) {
    out.verdict = SubComplexityVerdict::ZeroWitness;
  } else if (constant) {
    out.verdict = SubComplexityVerdict::BoundedStars;
  } else {
    out.verdict = SubComplexityVerdict::NoWitnessFound;
  }
  return out;
}

}  // namespace locfin

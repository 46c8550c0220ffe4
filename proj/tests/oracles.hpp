#pragma once

// Slow, independent reference computations used as test oracles.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "locfin/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix adjacency(const locfin::FiniteGraph& g) {
  const auto n = g.vertexCount();
  Matrix a(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) {
    a[e.u][e.v] = e.weight;
    a[e.v][e.u] = e.weight;
  }
  return a;
}

/// Cyclic Jacobi rotations; sorted eigenvalues of a symmetric matrix.
inline std::vector<double> eigenvalues(Matrix a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    }
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<double> eigenvalues(const locfin::FiniteGraph& g) { return eigenvalues(adjacency(g)); }

/// Ordered pairs (y, z) of distinct neighbors of x that are adjacent, by triple enumeration.
inline std::uint64_t triangles(const locfin::FiniteGraph& g, locfin::VertexId x) {
  const auto a = adjacency(g);
  std::uint64_t count = 0;
  for (std::size_t y = 0; y < a.size(); ++y) {
    for (std::size_t z = 0; z < a.size(); ++z) {
      if (y != z && y != x && z != x && a[x][y] > 0 && a[x][z] > 0 && a[y][z] > 0) ++count;
    }
  }
  return count;
}

inline std::uint64_t unorderedTriangles(const locfin::FiniteGraph& g) {
  const auto a = adjacency(g);
  std::uint64_t count = 0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = x + 1; y < a.size(); ++y) {
      for (std::size_t z = y + 1; z < a.size(); ++z) {
        if (a[x][y] > 0 && a[x][z] > 0 && a[y][z] > 0) ++count;
      }
    }
  }
  return count;
}

/// Maximum independent set size among the neighbors of x, by subset enumeration.
inline std::size_t neighborhoodMis(const locfin::FiniteGraph& g, locfin::VertexId x) {
  std::vector<locfin::VertexId> nb;
  for (const auto& y : g.neighbors(x)) nb.push_back(y.id);
  const std::size_t d = nb.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    bool independent = true;
    for (std::size_t i = 0; i < d && independent; ++i) {
      if (!((mask >> i) & 1U)) continue;
      for (std::size_t j = i + 1; j < d; ++j) {
        if (((mask >> j) & 1U) && g.adjacent(nb[i], nb[j])) {
          independent = false;
          break;
        }
      }
    }
    if (independent) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

/// Words over growing alphabets: position K (1-based) draws from K*M letters.
inline std::size_t countWords(std::size_t m, std::size_t maxLen) {
  std::vector<std::vector<int>> level = {{}};
  std::size_t total = 1;
  for (std::size_t len = 1; len <= maxLen; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : level) {
      for (std::size_t letter = 0; letter < len * m; ++letter) {
        auto v = w;
        v.push_back(static_cast<int>(letter));
        next.push_back(std::move(v));
      }
    }
    total += next.size();
    level = std::move(next);
  }
  return total;
}

inline locfin::FiniteGraph randomGraph(std::mt19937_64& rng, std::size_t maxN, double wMin = 0.1, double wMax = 10.0) {
  std::uniform_int_distribution<std::size_t> size(2, maxN);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> weight(wMin, wMax);
  const auto n = size(rng);
  const double p = 0.1 + 0.6 * coin(rng);
  std::vector<locfin::Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng) < p) edges.push_back({u, v, weight(rng)});
    }
  }
  return locfin::FiniteGraph(n, std::move(edges));
}

}  // namespace oracle

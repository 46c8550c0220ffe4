#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "locfin/family.hpp"
#include "locfin/generators.hpp"
#include "locfin/graph.hpp"

namespace locfin {

/// Malformed or non-canonical input. line/column are 1-based; 0 when the
/// problem is structural rather than lexical.
class FormatError : public std::runtime_error {
public:
  FormatError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

const char* toolVersion();

/// 64-bit FNV-1a, as 16 hex digits.
std::string configHash(std::string_view canonicalConfig);

struct Provenance {
  std::string tool = std::string("locfin ") + toolVersion();
  std::string configHash;
  std::uint64_t seed = 0;
  std::string graphRef;
};

/// {"vertexCount": N, "labels": [...], "edges": [[i, j, w], ...], "provenance": {...}}
/// Edges are written with i < j in sorted order; weights round-trip exactly.
std::string graphToJson(const FiniteGraph& g, const std::optional<Provenance>& prov = std::nullopt);

/// Strict reader. Rejects unknown keys (other than "provenance"), i >= j,
/// out-of-range endpoints, duplicate pairs, weights below kMinEdgeWeight,
/// and a label list of the wrong length.
FiniteGraph graphFromJson(std::string_view text);

void exportGraph(const FiniteGraph& g, const std::filesystem::path& path, const Provenance& prov);
FiniteGraph importGraph(const std::filesystem::path& path);

/// CSV with a leading "# tool=... config=... seed=..." comment line.
class CsvWriter {
public:
  CsvWriter(const std::filesystem::path& path, const Provenance& prov, const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);
  /// Starts a block with a different column set (e.g. witness rows after a sweep).
  void section(const std::vector<std::string>& columns);

private:
  std::ofstream out_;
  std::size_t width_ = 0;
};

/// Shortest round-trip representation of a double.
std::string formatDouble(double x);

/**
   Builds a family by CLI name: complete, star, kkn, skn, wordtree, ftree,
   jacobi. `size` is the vertex budget for the infinite families. Unknown or
   missing parameters throw std::invalid_argument.

   complete: n; star: n; kkn: k, n; skn: alpha; wordtree: M (depth chosen to
   cover size); ftree: alpha, connected (0/1); jacobi: alpha.
 */
GraphFamily familyByName(const std::string& name, const std::map<std::string, double>& params,
                         std::optional<std::size_t> size);

/// Parses "k=3,n=4,alpha=1.5" into a map; throws std::invalid_argument.
std::map<std::string, double> parseParams(std::string_view text);

/**
   Surgery plan file:
   {"parts": [{"family": "kkn", "params": {"k": 2, "n": 3}, "size": 7, "anchor": 0}, ...],
    "crossEdges": [[0, 1, 1.0], ...], "rowBound": 2}
   Cross edge weight defaults to 1 when omitted.
 */
SurgeryPlan surgeryPlanFromJson(std::string_view text);
SurgeryPlan loadSurgeryPlan(const std::filesystem::path& path);

}  // namespace locfin

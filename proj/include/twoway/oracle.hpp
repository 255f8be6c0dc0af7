#pragma once

// Exhaustive ground truth for small instances. Nothing here touches the
// flow network.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "twoway/fraction.hpp"
#include "twoway/problem.hpp"

namespace twoway {

struct OracleOptions {
  std::size_t max_elements = 24;
  // Restrict the enumeration to roundings with bits[k] == bit.
  std::optional<std::pair<std::size_t, int>> fixed;
};

struct OracleResult {
  Fraction optimum;
  std::vector<Rounding> witnesses;  // lexicographic order of the bit vectors
  std::int64_t valid_count = 0;     // roundings with discrepancy < 1
};

// Throws GuardExceeded when the instance has more than max_elements
// elements, and InputError when the constraint asks to round an integer up.
OracleResult oracle_optimal(const ScaledProblem& p, const OracleOptions& options = {});

// Bipartite graph on vertices 1..m per side; edges (left, right) are kept
// sorted and deduplicated.
class BipartiteGraph {
 public:
  BipartiteGraph(int m, std::vector<std::pair<int, int>> edges);

  int part_size() const { return m_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

 private:
  int m_;
  std::vector<std::pair<int, int>> edges_;
};

// Number of perfect matchings by recursive enumeration; m <= 10.
std::int64_t count_perfect_matchings(const BipartiteGraph& g);

}  // namespace twoway

#include "twoway/oracle.hpp"

#include <algorithm>

#include "twoway/errors.hpp"

namespace twoway {

OracleResult oracle_optimal(const ScaledProblem& p, const OracleOptions& options) {
  const std::size_t n = p.size();
  if (n > options.max_elements) {
    throw GuardExceeded("oracle limited to " + std::to_string(options.max_elements) + " elements, instance has " +
                        std::to_string(n));
  }
  if (options.fixed && options.fixed->first >= n) throw InputError("fixed element out of range");

  // Elements free to take either value; the rest are pinned.
  std::vector<std::uint8_t> pinned(n, 0);
  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < n; ++k) {
    if (options.fixed && options.fixed->first == k) {
      if (options.fixed->second == 1 && p.y[k] == 0) throw InputError("cannot round an integer element up");
      pinned[k] = static_cast<std::uint8_t>(options.fixed->second);
    } else if (p.y[k] > 0) {
      free.push_back(k);
    }
  }

  const PrefixSums sums = prefix_sums(p);
  OracleResult result;
  std::int64_t best = -1;
  std::vector<std::uint8_t> bits = pinned;
  const std::uint64_t total = std::uint64_t{1} << free.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    // Most significant free element first so witnesses come out lexicographic.
    for (std::size_t i = 0; i < free.size(); ++i) {
      bits[free[i]] = static_cast<std::uint8_t>((code >> (free.size() - 1 - i)) & 1);
    }
    const std::int64_t value = scaled_discrepancy(p, sums, bits);
    if (value < p.d) ++result.valid_count;
    if (best < 0 || value < best) {
      best = value;
      result.witnesses.clear();
    }
    if (value == best) result.witnesses.push_back(Rounding{bits});
  }
  result.optimum = Fraction(best, p.d);
  return result;
}

BipartiteGraph::BipartiteGraph(int m, std::vector<std::pair<int, int>> edges) : m_(m), edges_(std::move(edges)) {
  if (m < 1) throw InputError("bipartite graph needs at least one vertex per part");
  for (const auto& [left, right] : edges_) {
    if (left < 1 || left > m || right < 1 || right > m) throw InputError("bipartite edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

namespace {

std::int64_t count_from(const std::vector<std::vector<int>>& adjacent, std::size_t left, std::uint32_t used) {
  if (left == adjacent.size()) return 1;
  std::int64_t total = 0;
  for (const int right : adjacent[left]) {
    const std::uint32_t bit = std::uint32_t{1} << right;
    if ((used & bit) == 0) total += count_from(adjacent, left + 1, used | bit);
  }
  return total;
}

}  // namespace

std::int64_t count_perfect_matchings(const BipartiteGraph& g) {
  if (g.part_size() > 10) throw GuardExceeded("perfect matching count limited to part size 10");
  std::vector<std::vector<int>> adjacent(g.part_size());
  for (const auto& [left, right] : g.edges()) adjacent[left - 1].push_back(right - 1);
  return count_from(adjacent, 0, 0);
}

}  // namespace twoway

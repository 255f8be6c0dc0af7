#pragma once

// Test-only helpers. The max-flow routine here is a plain Edmonds-Karp on a
// capacity matrix and shares no code with the library's flow network.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <queue>
#include <vector>

#include "twoway/flow_network.hpp"
#include "twoway/generators.hpp"
#include "twoway/problem.hpp"

namespace twoway::testing {

struct CapacityEdge {
  int tail;
  int head;
  std::int64_t capacity;
};

inline std::int64_t edmonds_karp(int nodes, const std::vector<CapacityEdge>& edges, int source, int sink) {
  std::vector<std::vector<std::int64_t>> residual(nodes, std::vector<std::int64_t>(nodes, 0));
  for (const auto& e : edges) residual[e.tail][e.head] += e.capacity;
  std::int64_t total = 0;
  while (true) {
    std::vector<int> parent(nodes, -1);
    parent[source] = source;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty() && parent[sink] < 0) {
      const int x = frontier.front();
      frontier.pop();
      for (int y = 0; y < nodes; ++y) {
        if (parent[y] < 0 && residual[x][y] > 0) {
          parent[y] = x;
          frontier.push(y);
        }
      }
    }
    if (parent[sink] < 0) return total;
    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (int y = sink; y != source; y = parent[y]) push = std::min(push, residual[parent[y]][y]);
    for (int y = sink; y != source; y = parent[y]) {
      residual[parent[y]][y] -= push;
      residual[y][parent[y]] += push;
    }
    total += push;
  }
}

// Max flow of the arc set currently present in `net`, recomputed from scratch.
inline std::int64_t independent_max_flow(const FlowNetwork& net) {
  std::vector<CapacityEdge> edges;
  for (const auto& arc : net.forward_arcs()) edges.push_back({arc.tail, arc.head, arc.capacity});
  return edmonds_karp(net.node_count(), edges, net.source(), net.sink());
}

// Max flow of the rounding network restricted to side arcs with
// desirability >= threshold, built directly from the interval definitions.
inline std::int64_t reference_max_flow(const ScaledProblem& p, std::int64_t threshold, bool unit_middle = true) {
  const int n = static_cast<int>(p.size());
  const int m = static_cast<int>(p.m);
  const int nodes = 2 * m + 2 * n + 2;
  auto a = [](int j) { return j; };
  auto u = [&](int k) { return m + 1 + k; };
  auto v = [&](int k) { return m + 1 + n + k; };
  auto b = [&](int j) { return m + 2 * n + j; };
  const int s = 0;
  const int t = nodes - 1;
  std::vector<CapacityEdge> edges;
  for (int j = 1; j <= m; ++j) {
    edges.push_back({s, a(j), 1});
    edges.push_back({b(j), t, 1});
  }
  const PrefixSums sums = prefix_sums(p);
  for (int k = 0; k < n; ++k) edges.push_back({u(k), v(k), unit_middle ? 1 : m});
  for (int k = 0; k < n; ++k) {
    if (p.y[k] == 0) continue;
    for (int j = 1; j <= m; ++j) {
      const std::int64_t lo = sums.natural[k];
      const std::int64_t hi = sums.natural[k + 1];
      const std::int64_t f = std::min(j * p.d - lo, hi - (j - 1) * p.d);
      if (f >= threshold) edges.push_back({a(j), u(k), m});
    }
  }
  for (int pos = 0; pos < n; ++pos) {
    const int k = p.sigma[pos];
    if (p.y[k] == 0) continue;
    for (int j = 1; j <= m; ++j) {
      const std::int64_t lo = sums.permuted[pos];
      const std::int64_t hi = sums.permuted[pos + 1];
      const std::int64_t g = std::min(j * p.d - lo, hi - (j - 1) * p.d);
      if (g >= threshold) edges.push_back({v(k), b(j), m});
    }
  }
  return edmonds_karp(nodes, edges, s, t);
}

// Random instance with n in [min_n, max_n] and m in [1, n/2].
inline ScaledProblem random_small(Rng& rng, int min_n, int max_n, std::int64_t max_draw = 1'000'000) {
  RandomSpec spec;
  spec.n = static_cast<int>(rng.uniform(min_n, max_n));
  spec.m = static_cast<int>(rng.uniform(1, std::max(1, spec.n / 2)));
  spec.max_draw = std::max<std::int64_t>(max_draw, spec.n);
  spec.seed = static_cast<std::uint64_t>(rng.uniform(0, std::numeric_limits<std::int64_t>::max()));
  return random_instance(spec);
}

inline Rounding bits(std::initializer_list<int> values) {
  Rounding r;
  for (const int v : values) r.bits.push_back(static_cast<std::uint8_t>(v));
  return r;
}

}  // namespace twoway::testing

namespace twoway {

// gtest printer; found by argument-dependent lookup.
inline void PrintTo(const Rounding& r, std::ostream* os) {
  *os << '(';
  for (std::size_t k = 0; k < r.bits.size(); ++k) *os << (k ? "," : "") << int{r.bits[k]};
  *os << ')';
}

}  // namespace twoway

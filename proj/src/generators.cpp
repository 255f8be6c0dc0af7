#include "twoway/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>

#include "twoway/errors.hpp"

namespace twoway {
namespace {

ScaledProblem from_scaled(std::int64_t d, const std::vector<std::int64_t>& numerators,
                          const std::vector<int>& sigma_one_based) {
  std::vector<Rational> values;
  values.reserve(numerators.size());
  for (const std::int64_t y : numerators) values.push_back({y, d});
  return normalize(values, sigma_from_one_based(sigma_one_based));
}

// Perfect matching (left -> right, 0-based) containing `forced`, if any.
std::optional<std::vector<int>> matching_with(const BipartiteGraph& g, std::pair<int, int> forced) {
  const int m = g.part_size();
  std::vector<std::vector<int>> adjacent(m);
  for (const auto& [left, right] : g.edges()) {
    if (left == forced.first || right == forced.second) continue;
    adjacent[left - 1].push_back(right - 1);
  }
  std::vector<int> match_left(m, -1);
  std::vector<int> match_right(m, -1);
  match_left[forced.first - 1] = forced.second - 1;
  match_right[forced.second - 1] = forced.first - 1;

  std::vector<char> seen;
  auto augment = [&](auto&& self, int left) -> bool {
    for (const int right : adjacent[left]) {
      if (seen[right]) continue;
      seen[right] = 1;
      if (match_right[right] < 0 || self(self, match_right[right])) {
        match_left[left] = right;
        match_right[right] = left;
        return true;
      }
    }
    return false;
  };
  for (int left = 0; left < m; ++left) {
    if (match_left[left] >= 0) continue;
    seen.assign(m, 0);
    if (!augment(augment, left)) return std::nullopt;
  }
  return match_left;
}

}  // namespace

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t family, std::uint64_t index) {
  return seed ^ splitmix64(splitmix64(family) ^ index);
}

ScaledProblem theorem2_instance(int m) {
  if (m < 1) throw InputError("theorem2 instance needs m >= 1");
  const int n = 2 * m + 2;
  std::vector<std::int64_t> y(n);
  std::vector<int> sigma(n);
  y[0] = y[1] = y[2] = 1;
  y[m + 2] = 2 * m - 1;
  for (int k = 1; k < m; ++k) {
    y[k + 2] = 2;
    y[k + m + 2] = 2 * m;
  }
  sigma[0] = 2;
  sigma[1] = 1;
  sigma[2] = m + 3;
  sigma[n - 1] = 3;
  for (int k = 1; k < m; ++k) {
    sigma[2 * k + 1] = k + 3;
    sigma[2 * k + 2] = k + m + 3;
  }
  ScaledProblem p = from_scaled(n, y, sigma);
  if (p.padded || p.m != m) throw InternalError("theorem2 instance does not sum to m");
  return p;
}

ScaledProblem theorem3_instance(int n) {
  if (n < 2) throw InputError("theorem3 instance needs n >= 2");
  std::vector<std::int64_t> y(n);
  y[0] = 1;
  for (int k = 2; k <= n; ++k) y[k - 1] = (k % 2 == 0) ? n - 1 : 2;
  std::vector<int> sigma;
  const int first_parity = n % 2;  // odd indices first when n is odd
  for (int k = 1; k <= n; ++k) {
    if (k % 2 == first_parity) sigma.push_back(k);
  }
  for (int k = 1; k <= n; ++k) {
    if (k % 2 != first_parity) sigma.push_back(k);
  }
  return from_scaled(n + 1, y, sigma);
}

ScaledProblem worked_example7() {
  return from_scaled(28, {8, 8, 24, 11, 11, 11, 11}, {2, 1, 3, 5, 4, 7, 6});
}

RandomInstance random_instance_with_stats(const RandomSpec& spec) {
  if (spec.n < 1 || spec.m < 1 || spec.m > spec.n) throw InputError("random instance needs 1 <= m <= n");
  if (spec.max_draw < spec.n) throw InputError("random instance needs max_draw >= n");
  Rng rng(spec.seed);
  RandomInstance out;
  std::vector<std::int64_t> y(spec.n);
  std::vector<int> indices(spec.n);
  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    std::int64_t total = 0;
    for (auto& value : y) {
      value = rng.uniform(1, spec.max_draw);
      total += value;
    }
    const std::int64_t deficit = (spec.m - total % spec.m) % spec.m;
    if (deficit > 0) {
      std::iota(indices.begin(), indices.end(), 0);
      rng.shuffle(indices);
      for (std::int64_t i = 0; i < deficit; ++i) ++y[indices[i]];
      total += deficit;
    }
    const std::int64_t d = total / spec.m;
    if (std::any_of(y.begin(), y.end(), [d](std::int64_t value) { return value >= d; })) {
      ++out.rejections;
      continue;
    }
    std::vector<int> sigma(spec.n);
    std::iota(sigma.begin(), sigma.end(), 0);
    rng.shuffle(sigma);

    ScaledProblem& p = out.problem;
    p.d = d;
    p.y = y;
    p.floors.assign(spec.n, 0);
    p.sigma = std::move(sigma);
    p.m = spec.m;
    p.padded = false;
    if (!validate(p).empty()) throw InternalError("random instance violates problem invariants");
    return out;
  }
  throw InputError("random instance rejected " + std::to_string(spec.max_attempts) + " times; m too close to n");
}

ScaledProblem random_instance(const RandomSpec& spec) { return random_instance_with_stats(spec).problem; }

ScaledProblem from_bipartite(const BipartiteGraph& g) {
  const auto& edges = g.edges();
  const auto n = static_cast<std::int64_t>(edges.size());
  if (n == 0) throw InputError("bipartite graph has no edges");

  std::vector<std::int64_t> weight(edges.size(), 0);
  for (const auto& edge : edges) {
    const auto matching = matching_with(g, edge);
    if (!matching) {
      throw InputError("edge (" + std::to_string(edge.first) + "," + std::to_string(edge.second) +
                       ") lies on no perfect matching");
    }
    for (int left = 0; left < g.part_size(); ++left) {
      const std::pair<int, int> used{left + 1, (*matching)[left] + 1};
      const auto at = std::lower_bound(edges.begin(), edges.end(), used);
      ++weight[at - edges.begin()];
    }
  }

  std::vector<int> sigma(edges.size());
  std::iota(sigma.begin(), sigma.end(), 1);
  std::sort(sigma.begin(), sigma.end(), [&](int x, int y) {
    const auto& ex = edges[x - 1];
    const auto& ey = edges[y - 1];
    return std::pair(ex.second, ex.first) < std::pair(ey.second, ey.first);
  });
  return from_scaled(n, weight, sigma);
}

}  // namespace twoway

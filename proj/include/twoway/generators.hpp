#pragma once

#include <cstdint>
#include <random>

#include "twoway/oracle.hpp"
#include "twoway/problem.hpp"

namespace twoway {

// Tight instance for the (2m+1)/(2m+2) bound: n = 2m+2, d = n.
ScaledProblem theorem2_instance(int m);

// Tight instance for the n/(n+1) bound: d = n+1 with a shuffle permutation
// that lists the odd indices first (n odd) or the even indices first (n
// even), then the remaining indices in increasing order. The fractional sum
// is not integral, so the result is padded.
ScaledProblem theorem3_instance(int n);

// x = (8, 8, 24, 11, 11, 11, 11) / 28 with sigma = (2, 1, 3, 5, 4, 7, 6).
ScaledProblem worked_example7();

struct RandomSpec {
  int n = 10;
  int m = 1;
  std::int64_t max_draw = 1'000'000;  // y_k uniform in [1, max_draw]
  std::uint64_t seed = 0;
  int max_attempts = 100'000;
};

// mt19937_64 with a portable unbiased range reduction, so streams are
// bitwise identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
// Independent stream seed for instance `index` of family `family`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t family, std::uint64_t index);

struct RandomInstance {
  ScaledProblem problem;
  int rejections = 0;
};

// Draws y_k, bumps r distinct uniformly chosen y's by one so the total is a
// multiple of m, sets d = total / m and starts over if some y_k >= d.
RandomInstance random_instance_with_stats(const RandomSpec& spec);
ScaledProblem random_instance(const RandomSpec& spec);

// Values x = (1/n) * sum of one perfect matching per edge; edges labelled
// lexicographically by (left, right), sigma ordered by (right, left).
// Throws InputError if some edge lies on no perfect matching.
ScaledProblem from_bipartite(const BipartiteGraph& g);

}  // namespace twoway

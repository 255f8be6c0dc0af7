#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "twoway/flow_network.hpp"
#include "twoway/fraction.hpp"
#include "twoway/problem.hpp"

namespace twoway {

struct SolveOptions {
  // Skip side arcs below pruning_cutoff(); they can never be needed.
  bool prune = true;
  SortMethod sort = SortMethod::kComparison;
};

struct SolveResult {
  Rounding rounding;
  Fraction optimum;
  // Desirability of the last batch needed, in units of 1/d. The optimum is
  // (d - threshold) / d.
  std::int64_t threshold = 0;
  Counters counters;
};

// Minimum-discrepancy rounding. Side arcs are added in decreasing
// desirability while augmenting from a_1, ..., a_m in turn; a failed search
// from a_j proves that the arcs added so far cannot carry m units, so the
// batch that finally completes the flow fixes the optimum.
SolveResult solve_optimal(const ScaledProblem& p, const SolveOptions& options = {});

// Some rounding with discrepancy < 1 (maximum flow in the full network).
Rounding solve_feasible(const ScaledProblem& p);

// A rounding with discrepancy < 1 and bits[k] == bit. Requires 0 < y[k] < d.
Rounding solve_fixed(const ScaledProblem& p, std::size_t k, int bit);

struct MatchedPair {
  int left_unit = 0;   // j of a_j
  int right_unit = 0;  // j' of b_j'
  int element = 0;     // k routing the pair: a_j -> u_k -> v_k -> b_j'
};

struct BottleneckResult {
  Fraction value;
  std::int64_t threshold = 0;
  std::vector<MatchedPair> matching;
  // Units routed through each middle arc; a real rounding needs all <= 1.
  std::vector<std::int64_t> middle_load;

  bool is_valid_rounding() const;
  // bits[k] = middle_load[k] when that is a 0/1 vector.
  std::optional<Rounding> as_rounding() const;
};

// Bottleneck assignment of a_1..a_m to b_1..b_m with middle capacities
// lifted: maximizes over perfect matchings the smallest min(f(j,k), g(j',k))
// used. Binary search over the distinct desirability values.
BottleneckResult bottleneck_assignment(const ScaledProblem& p);

}  // namespace twoway

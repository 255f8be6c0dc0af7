#include "twoway/solver.hpp"

#include <algorithm>

#include "twoway/errors.hpp"

namespace twoway {
namespace {

Rounding middle_flows(const FlowNetwork& net) {
  Rounding r;
  r.bits.resize(net.element_count());
  for (std::size_t k = 0; k < r.bits.size(); ++k) r.bits[k] = static_cast<std::uint8_t>(net.middle_flow(k));
  return r;
}

void expect_full_flow(const ScaledProblem& p, const FlowNetwork& net) {
  if (net.flow_value() != p.m) {
    throw InternalError("network carries " + std::to_string(net.flow_value()) + " of " + std::to_string(p.m) +
                        " units; the instance is not normalized");
  }
}

}  // namespace

SolveResult solve_optimal(const ScaledProblem& p, const SolveOptions& options) {
  SolveResult result;
  if (p.m == 0) {
    result.rounding.bits.assign(p.size(), 0);
    result.optimum = Fraction(0, 1);
    result.threshold = p.d;
    return result;
  }

  const BatchOptions batch_options{options.prune ? pruning_cutoff(p) : 1, options.sort};
  const std::vector<ArcBatch> batches = enumerate_batches(p, batch_options);
  FlowNetwork net(p.size(), p.m);
  std::size_t next = 0;
  for (int j = 1; j <= p.m; ++j) {
    net.begin_search(j);
    while (!net.advance_search()) {
      if (next == batches.size()) {
        throw InternalError("side arcs exhausted at a" + std::to_string(j) +
                            (options.prune ? " (pruned below " + std::to_string(batch_options.min_desirability) + ")"
                                           : std::string()));
      }
      net.extend_search(net.add_batch(batches[next++]));
    }
    net.commit_search();
  }

  result.threshold = batches[next - 1].desirability;
  result.optimum = Fraction(p.d - result.threshold, p.d);
  result.rounding = middle_flows(net);
  result.counters = net.counters();

  const DiscrepancyReport achieved = discrepancy(p, result.rounding);
  if (achieved.value != result.optimum) {
    throw InternalError("extracted rounding has discrepancy " + achieved.value.to_string() + ", expected " +
                        result.optimum.to_string());
  }
  return result;
}

Rounding solve_feasible(const ScaledProblem& p) {
  if (p.m == 0) return Rounding{std::vector<std::uint8_t>(p.size(), 0)};
  auto [value, net] = max_flow_at_threshold(p, 1);
  expect_full_flow(p, net);
  return middle_flows(net);
}

Rounding solve_fixed(const ScaledProblem& p, std::size_t k, int bit) {
  if (k >= p.size()) throw InputError("element index out of range");
  if (bit != 0 && bit != 1) throw InputError("bit must be 0 or 1");
  if (p.y[k] == 0) throw InputError("element " + std::to_string(k + 1) + " is an integer and cannot be rounded up");
  auto [value, net] = max_flow_at_threshold(p, 1);
  expect_full_flow(p, net);
  net.push_cycle(k, bit == 1);
  return middle_flows(net);
}

bool BottleneckResult::is_valid_rounding() const {
  return std::all_of(middle_load.begin(), middle_load.end(), [](std::int64_t load) { return load <= 1; });
}

std::optional<Rounding> BottleneckResult::as_rounding() const {
  if (!is_valid_rounding()) return std::nullopt;
  Rounding r;
  for (const std::int64_t load : middle_load) r.bits.push_back(static_cast<std::uint8_t>(load));
  return r;
}

BottleneckResult bottleneck_assignment(const ScaledProblem& p) {
  BottleneckResult result;
  result.middle_load.assign(p.size(), 0);
  if (p.m == 0) {
    result.threshold = p.d;
    result.value = Fraction(p.d, p.d);
    return result;
  }

  std::vector<std::int64_t> values;
  for (const ArcBatch& batch : enumerate_batches(p)) values.push_back(batch.desirability);

  // values is strictly decreasing and the flow is monotone in the threshold:
  // find the first index whose network carries m units.
  std::size_t lo = 0;
  std::size_t hi = values.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (max_flow_at_threshold(p, values[mid], MiddleCapacity::kUnbounded).first == p.m) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo == values.size()) throw InternalError("no perfect assignment at any threshold");

  result.threshold = values[lo];
  result.value = Fraction(result.threshold, p.d);
  auto [flow, net] = max_flow_at_threshold(p, result.threshold, MiddleCapacity::kUnbounded);

  // Pair each unit entering u_k with a unit leaving v_k.
  std::vector<std::vector<int>> outgoing(p.size());
  std::vector<std::pair<int, int>> incoming;
  for (const FlowNetwork::Arc& arc : net.forward_arcs()) {
    for (std::int64_t unit = 0; unit < arc.flow; ++unit) {
      if (arc.kind == ArcKind::kLeft) incoming.emplace_back(arc.tail, arc.head - net.u(0));
      if (arc.kind == ArcKind::kRight) outgoing[arc.tail - net.v(0)].push_back(arc.head - net.b(0));
    }
  }
  std::sort(incoming.begin(), incoming.end());
  for (auto [left, element] : incoming) {
    auto& exits = outgoing[element];
    if (exits.empty()) throw InternalError("flow decomposition failed at element " + std::to_string(element + 1));
    result.matching.push_back({left, exits.front(), element});
    exits.erase(exits.begin());
  }
  for (std::size_t k = 0; k < p.size(); ++k) result.middle_load[k] = net.middle_flow(k);
  return result;
}

}  // namespace twoway

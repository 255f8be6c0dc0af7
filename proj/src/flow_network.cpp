#include "twoway/flow_network.hpp"

#include <algorithm>
#include <tuple>

#include "twoway/errors.hpp"

namespace twoway {
namespace {

std::int64_t interval_desirability(std::int64_t lo, std::int64_t hi, int j, std::int64_t d) {
  return std::min(j * d - lo, hi - (j - 1) * d);
}

// Units j whose interval [j-1, j) meets [lo, hi), for lo < hi.
std::pair<int, int> touched_units(std::int64_t lo, std::int64_t hi, std::int64_t d) {
  return {static_cast<int>(floor_div(lo, d) + 1), static_cast<int>(ceil_div(hi, d))};
}

bool batch_order(const SideArc& x, const SideArc& y) {
  return std::tuple(-x.desirability, x.kind, x.unit, x.element) <
         std::tuple(-y.desirability, y.kind, y.unit, y.element);
}

void bucket_sort(std::vector<SideArc>& arcs, std::int64_t d) {
  const std::size_t buckets = std::max<std::size_t>(arcs.size(), 1);
  std::vector<std::vector<SideArc>> table(buckets);
  for (const SideArc& arc : arcs) {
    const auto slot = static_cast<std::size_t>(static_cast<__int128>(d - arc.desirability) * buckets / (d + 1));
    table[slot].push_back(arc);
  }
  arcs.clear();
  for (auto& bucket : table) {
    std::sort(bucket.begin(), bucket.end(), batch_order);
    arcs.insert(arcs.end(), bucket.begin(), bucket.end());
  }
}

}  // namespace

std::string_view to_string(ArcKind kind) {
  switch (kind) {
    case ArcKind::kSource: return "source";
    case ArcKind::kLeft: return "left";
    case ArcKind::kMiddle: return "middle";
    case ArcKind::kRight: return "right";
    case ArcKind::kSink: return "sink";
  }
  return "unknown";
}

std::int64_t desirability_left(const ScaledProblem& p, const PrefixSums& sums, int j, std::size_t k) {
  if (p.y[k] == 0) return 0;
  return interval_desirability(sums.natural[k], sums.natural[k + 1], j, p.d);
}

std::int64_t desirability_left(const ScaledProblem& p, int j, std::size_t k) {
  return desirability_left(p, prefix_sums(p), j, k);
}

std::int64_t desirability_right(const ScaledProblem& p, const PrefixSums& sums, int j, std::size_t pos) {
  if (p.y[p.sigma[pos]] == 0) return 0;
  return interval_desirability(sums.permuted[pos], sums.permuted[pos + 1], j, p.d);
}

std::int64_t desirability_right(const ScaledProblem& p, int j, std::size_t pos) {
  return desirability_right(p, prefix_sums(p), j, pos);
}

std::vector<ArcBatch> enumerate_batches(const ScaledProblem& p, const BatchOptions& options) {
  const PrefixSums sums = prefix_sums(p);
  std::vector<SideArc> arcs;
  arcs.reserve(4 * p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.y[k] == 0) continue;
    const auto [first, last] = touched_units(sums.natural[k], sums.natural[k + 1], p.d);
    for (int j = first; j <= last; ++j) {
      const std::int64_t f = desirability_left(p, sums, j, k);
      if (f >= options.min_desirability) arcs.push_back({ArcKind::kLeft, j, static_cast<int>(k), f});
    }
  }
  for (std::size_t pos = 0; pos < p.size(); ++pos) {
    if (p.y[p.sigma[pos]] == 0) continue;
    const auto [first, last] = touched_units(sums.permuted[pos], sums.permuted[pos + 1], p.d);
    for (int j = first; j <= last; ++j) {
      const std::int64_t g = desirability_right(p, sums, j, pos);
      if (g >= options.min_desirability) arcs.push_back({ArcKind::kRight, j, p.sigma[pos], g});
    }
  }

  if (options.sort == SortMethod::kBucket) {
    bucket_sort(arcs, p.d);
  } else {
    std::sort(arcs.begin(), arcs.end(), batch_order);
  }

  std::vector<ArcBatch> batches;
  for (const SideArc& arc : arcs) {
    if (batches.empty() || batches.back().desirability != arc.desirability) {
      batches.push_back({arc.desirability, {}});
    }
    batches.back().arcs.push_back(arc);
  }
  return batches;
}

std::int64_t pruning_cutoff(const ScaledProblem& p) {
  if (p.m == 0) return 1;
  const std::int64_t limit = std::min<std::int64_t>(2 * p.m + 2, static_cast<std::int64_t>(p.size()));
  return std::max<std::int64_t>(1, ceil_div(p.d, limit));
}

FlowNetwork::FlowNetwork(std::size_t n, std::int64_t m, MiddleCapacity middle)
    : n_(n), m_(m), side_capacity_(std::max<std::int64_t>(m, 1)) {
  const std::size_t nodes = static_cast<std::size_t>(2 * m + 2 * static_cast<std::int64_t>(n) + 2);
  adjacency_.resize(nodes);
  stamp_.assign(nodes, 0);
  parent_.assign(nodes, -1);
  const std::int64_t middle_capacity = middle == MiddleCapacity::kUnit ? 1 : side_capacity_;
  for (int j = 1; j <= m; ++j) source_arcs_.push_back(add_arc(source(), a(j), 1, ArcKind::kSource, 0));
  for (std::size_t k = 0; k < n; ++k) middle_arcs_.push_back(add_arc(u(k), v(k), middle_capacity, ArcKind::kMiddle, 0));
  for (int j = 1; j <= m; ++j) add_arc(b(j), sink(), 1, ArcKind::kSink, 0);
}

std::string FlowNetwork::node_label(int node) const {
  if (node == source()) return "s";
  if (node == sink()) return "t";
  if (node <= m_) return "a" + std::to_string(node);
  if (node < v(0)) return "u" + std::to_string(node - u(0) + 1);
  if (node < b(1)) return "v" + std::to_string(node - v(0) + 1);
  return "b" + std::to_string(node - b(0));
}

FlowNetwork::ArcId FlowNetwork::add_arc(int tail, int head, std::int64_t capacity, ArcKind kind,
                                        std::int64_t desirability) {
  const auto id = static_cast<ArcId>(arcs_.size());
  arcs_.push_back({tail, head, capacity, 0, kind, desirability});
  arcs_.push_back({head, tail, 0, 0, kind, desirability});
  insert_sorted(tail, id);
  insert_sorted(head, id + 1);
  return id;
}

void FlowNetwork::insert_sorted(int node, ArcId id) {
  auto& list = adjacency_[node];
  const int head = arcs_[id].head;
  const auto at = std::upper_bound(list.begin(), list.end(), head,
                                   [this](int h, ArcId other) { return h < arcs_[other].head; });
  list.insert(at, id);
}

FlowNetwork::ArcRange FlowNetwork::add_batch(const ArcBatch& batch) {
  if (batch.desirability < 1) throw InputError("side arcs need positive desirability");
  if (has_batches_ && batch.desirability >= last_desirability_) {
    throw InputError("batches must be added in strictly decreasing desirability");
  }
  ArcRange range{static_cast<ArcId>(arcs_.size()), 0};
  for (const SideArc& arc : batch.arcs) {
    if (arc.unit < 1 || arc.unit > m_ || arc.element < 0 || static_cast<std::size_t>(arc.element) >= n_) {
      throw InputError("side arc endpoint out of range");
    }
    if (arc.kind == ArcKind::kLeft) {
      add_arc(a(arc.unit), u(arc.element), side_capacity_, ArcKind::kLeft, batch.desirability);
    } else if (arc.kind == ArcKind::kRight) {
      add_arc(v(arc.element), b(arc.unit), side_capacity_, ArcKind::kRight, batch.desirability);
    } else {
      throw InputError("batches may only contain side arcs");
    }
  }
  range.last = static_cast<ArcId>(arcs_.size());
  side_arcs_ += batch.arcs.size();
  last_desirability_ = batch.desirability;
  has_batches_ = true;
  counters_.arcs_added += static_cast<std::int64_t>(batch.arcs.size());
  ++counters_.batches_added;
  return range;
}

void FlowNetwork::visit(int node, ArcId via) {
  stamp_[node] = epoch_;
  parent_[node] = via;
  queue_.push_back(node);
}

void FlowNetwork::push_unit(ArcId id) {
  arcs_[id].flow += 1;
  arcs_[id ^ 1].flow -= 1;
}

void FlowNetwork::begin_search(int j) {
  if (j < 1 || j > m_) throw InputError("unit index out of range");
  if (residual(source_arcs_[j - 1]) <= 0) throw InputError("source arc of a" + std::to_string(j) + " already saturated");
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  queue_.clear();
  queue_head_ = 0;
  search_unit_ = j;
  search_found_ = false;
  search_active_ = true;
  visit(a(j), -1);
}

bool FlowNetwork::advance_search() {
  if (!search_active_) throw InternalError("advance_search without begin_search");
  if (search_found_) return true;
  while (queue_head_ < queue_.size()) {
    const int node = queue_[queue_head_];
    for (const ArcId e : adjacency_[node]) {
      ++counters_.bfs_arc_visits;
      if (residual(e) <= 0) continue;
      const int head = arcs_[e].head;
      if (head == source() || visited(head)) continue;
      visit(head, e);
      if (head == sink()) {
        search_found_ = true;
        return true;
      }
    }
    ++queue_head_;
  }
  return false;
}

void FlowNetwork::extend_search(ArcRange added) {
  if (!search_active_ || search_found_) return;
  for (ArcId e = added.first; e < added.last; ++e) {
    const Arc& arc = arcs_[e];
    if (!visited(arc.tail)) continue;
    ++counters_.bfs_arc_visits;
    if (arc.capacity - arc.flow <= 0 || arc.head == source() || visited(arc.head)) continue;
    visit(arc.head, e);
    if (arc.head == sink()) {
      search_found_ = true;
      return;
    }
  }
}

void FlowNetwork::commit_search() {
  if (!search_active_ || !search_found_) throw InternalError("commit_search without a found path");
  for (int node = sink(); node != a(search_unit_);) {
    const ArcId e = parent_[node];
    push_unit(e);
    node = arcs_[e].tail;
  }
  push_unit(source_arcs_[search_unit_ - 1]);
  ++counters_.augmentations;
  search_active_ = false;
}

bool FlowNetwork::augment_from(int j) {
  begin_search(j);
  if (!advance_search()) {
    search_active_ = false;
    return false;
  }
  commit_search();
  return true;
}

std::optional<std::vector<FlowNetwork::ArcId>> FlowNetwork::residual_path(int from, int to) {
  if (from < 0 || from >= node_count() || to < 0 || to >= node_count()) throw InputError("node out of range");
  search_active_ = false;
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  queue_.clear();
  visit(from, -1);
  bool found = from == to;
  for (std::size_t head = 0; head < queue_.size() && !found; ++head) {
    for (const ArcId e : adjacency_[queue_[head]]) {
      ++counters_.bfs_arc_visits;
      if (residual(e) <= 0 || visited(arcs_[e].head)) continue;
      visit(arcs_[e].head, e);
      if (arcs_[e].head == to) {
        found = true;
        break;
      }
    }
  }
  if (!found) return std::nullopt;
  std::vector<ArcId> path;
  for (int node = to; node != from; node = arcs_[parent_[node]].tail) path.push_back(parent_[node]);
  std::reverse(path.begin(), path.end());
  return path;
}

void FlowNetwork::push_cycle(std::size_t k, bool saturate) {
  if (k >= n_) throw InputError("element index out of range");
  const ArcId middle = middle_arcs_[k];
  if (arcs_[middle].capacity != 1) throw InputError("push_cycle needs unit middle capacities");
  const std::int64_t target = saturate ? 1 : 0;
  if (arcs_[middle].flow == target) return;
  const auto path = saturate ? residual_path(v(k), u(k)) : residual_path(u(k), v(k));
  if (!path) {
    throw InternalError("no residual cycle through middle arc of element " + std::to_string(k + 1));
  }
  for (const ArcId e : *path) push_unit(e);
  push_unit(saturate ? middle : middle ^ 1);
}

std::int64_t FlowNetwork::flow_value() const {
  std::int64_t total = 0;
  for (const ArcId e : source_arcs_) total += arcs_[e].flow;
  return total;
}

std::int64_t FlowNetwork::middle_flow(std::size_t k) const { return arcs_[middle_arcs_[k]].flow; }

std::vector<FlowNetwork::Arc> FlowNetwork::forward_arcs() const {
  std::vector<Arc> out;
  out.reserve(arcs_.size() / 2);
  for (std::size_t e = 0; e < arcs_.size(); e += 2) out.push_back(arcs_[e]);
  return out;
}

std::vector<std::string> FlowNetwork::check_invariants() const {
  std::vector<std::string> problems;
  std::vector<std::int64_t> balance(adjacency_.size(), 0);
  for (std::size_t e = 0; e < arcs_.size(); e += 2) {
    const Arc& arc = arcs_[e];
    if (arc.flow < 0 || arc.flow > arc.capacity) {
      problems.push_back("capacity violated on " + node_label(arc.tail) + "->" + node_label(arc.head));
    }
    if (arcs_[e + 1].flow != -arc.flow) problems.push_back("reverse arc out of sync at arc " + std::to_string(e));
    balance[arc.tail] -= arc.flow;
    balance[arc.head] += arc.flow;
  }
  for (int node = 0; node < node_count(); ++node) {
    if (node != source() && node != sink() && balance[node] != 0) {
      problems.push_back("conservation violated at " + node_label(node));
    }
  }
  if (balance[sink()] != flow_value()) problems.push_back("sink inflow differs from source outflow");
  if (flow_value() > m_) problems.push_back("flow value exceeds m");
  return problems;
}

void FlowNetwork::dump(std::ostream& os) const {
  for (std::size_t e = 0; e < arcs_.size(); e += 2) {
    const Arc& arc = arcs_[e];
    os << to_string(arc.kind) << ' ' << node_label(arc.tail) << ' ' << node_label(arc.head) << ' '
       << arc.desirability << ' ' << arc.flow << '\n';
  }
}

std::pair<std::int64_t, FlowNetwork> max_flow_at_threshold(const ScaledProblem& p, std::int64_t threshold,
                                                           MiddleCapacity middle) {
  if (threshold < 1) throw InputError("threshold must be at least 1");
  FlowNetwork net(p.size(), p.m, middle);
  for (const ArcBatch& batch : enumerate_batches(p, {threshold, SortMethod::kComparison})) net.add_batch(batch);
  for (int j = 1; j <= p.m; ++j) net.augment_from(j);
  const std::int64_t value = net.flow_value();
  return {value, std::move(net)};
}

}  // namespace twoway

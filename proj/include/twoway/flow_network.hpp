#pragma once

// The s -> a -> u -> v -> b -> t rounding network with unit-capacity
// augmenting paths.
//
// Node layout: s, a_1..a_m, u_0..u_{n-1}, v_0..v_{n-1}, b_1..b_m, t.
// Source, sink and middle arcs have capacity 1; side arcs (a_j -> u_k and
// v_k -> b_j) are effectively unbounded and are stored with capacity m. Side
// arcs are only ever added, in batches of strictly decreasing desirability,
// so the flow found so far stays feasible as the network grows.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twoway/problem.hpp"

namespace twoway {

enum class ArcKind : std::uint8_t { kSource, kLeft, kMiddle, kRight, kSink };

std::string_view to_string(ArcKind kind);

// kLeft: a_unit -> u_element. kRight: v_element -> b_unit.
struct SideArc {
  ArcKind kind = ArcKind::kLeft;
  int unit = 0;
  int element = 0;
  std::int64_t desirability = 0;

  friend bool operator==(const SideArc&, const SideArc&) = default;
};

struct ArcBatch {
  std::int64_t desirability = 0;
  std::vector<SideArc> arcs;
};

struct Counters {
  std::int64_t arcs_added = 0;
  std::int64_t batches_added = 0;
  std::int64_t bfs_arc_visits = 0;
  std::int64_t augmentations = 0;
};

// min(j*d - Y[k], Y[k+1] - (j-1)*d): desirability of a_j -> u_k in units of
// 1/d. Returns 0 for elements with y[k] == 0, which never carry flow.
std::int64_t desirability_left(const ScaledProblem& p, const PrefixSums& sums, int j, std::size_t k);
std::int64_t desirability_left(const ScaledProblem& p, int j, std::size_t k);

// Same with the permuted prefix sums; describes v_{sigma[pos]} -> b_j.
std::int64_t desirability_right(const ScaledProblem& p, const PrefixSums& sums, int j, std::size_t pos);
std::int64_t desirability_right(const ScaledProblem& p, int j, std::size_t pos);

enum class SortMethod { kComparison, kBucket };

struct BatchOptions {
  std::int64_t min_desirability = 1;
  SortMethod sort = SortMethod::kComparison;
};

// All side arcs with desirability >= min_desirability, grouped by value and
// sorted strictly decreasing. Within a batch arcs are ordered left before
// right, then by unit, then by element.
std::vector<ArcBatch> enumerate_batches(const ScaledProblem& p, const BatchOptions& options = {});

// Smallest desirability an optimal solution can need: the optimum never
// exceeds 1 - 1/min(2m+2, n), so arcs below ceil(d / min(2m+2, n)) are
// never required. Returns 1 when m == 0.
std::int64_t pruning_cutoff(const ScaledProblem& p);

enum class MiddleCapacity { kUnit, kUnbounded };

class FlowNetwork {
 public:
  using ArcId = int;

  struct Arc {
    int tail = 0;
    int head = 0;
    std::int64_t capacity = 0;
    std::int64_t flow = 0;
    ArcKind kind = ArcKind::kSource;
    std::int64_t desirability = 0;
  };

  // Half-open range of forward arc ids created by one add_batch() call.
  struct ArcRange {
    ArcId first = 0;
    ArcId last = 0;
  };

  FlowNetwork(std::size_t n, std::int64_t m, MiddleCapacity middle = MiddleCapacity::kUnit);

  std::size_t element_count() const { return n_; }
  std::int64_t unit_count() const { return m_; }
  int node_count() const { return static_cast<int>(adjacency_.size()); }

  int source() const { return 0; }
  int a(int j) const { return j; }
  int u(std::size_t k) const { return static_cast<int>(m_ + 1 + k); }
  int v(std::size_t k) const { return static_cast<int>(m_ + 1 + n_ + k); }
  int b(int j) const { return static_cast<int>(m_ + 2 * n_) + j; }
  int sink() const { return static_cast<int>(2 * m_ + 2 * n_ + 1); }
  std::string node_label(int node) const;

  // Appends a batch; its desirability must be strictly below every batch
  // added before. Existing flow is left untouched.
  ArcRange add_batch(const ArcBatch& batch);

  // Breadth-first search in the residual graph from a_j; on success pushes
  // one unit from s through a_j to t. Requires s -> a_j unsaturated.
  bool augment_from(int j);

  // Resumable form of augment_from(). After a failed advance_search() the
  // caller may add arcs, report them through extend_search() and call
  // advance_search() again; the visited set only grows since no flow has
  // moved in between.
  void begin_search(int j);
  bool advance_search();
  void extend_search(ArcRange added);
  void commit_search();

  // Shortest residual path as a list of arc ids. Must not be called while a
  // resumable search is in progress.
  std::optional<std::vector<ArcId>> residual_path(int from, int to);

  // Pushes one unit around a residual cycle through the middle arc of k so
  // that it carries `saturate ? 1 : 0` units. The total flow value is
  // unchanged. Throws InternalError if no such cycle exists.
  void push_cycle(std::size_t k, bool saturate);

  std::int64_t flow_value() const;
  std::int64_t middle_flow(std::size_t k) const;
  std::int64_t batch_floor() const { return last_desirability_; }
  std::size_t side_arc_count() const { return side_arcs_; }
  const Counters& counters() const { return counters_; }
  const Arc& arc(ArcId id) const { return arcs_[id]; }
  std::int64_t residual(ArcId id) const { return arcs_[id].capacity - arcs_[id].flow; }

  // Forward arcs in creation order.
  std::vector<Arc> forward_arcs() const;

  // Empty when capacity, conservation and integrality hold.
  std::vector<std::string> check_invariants() const;

  // One "kind tail head F flow" row per forward arc, creation order.
  void dump(std::ostream& os) const;

 private:
  ArcId add_arc(int tail, int head, std::int64_t capacity, ArcKind kind, std::int64_t desirability);
  void insert_sorted(int node, ArcId id);
  void visit(int node, ArcId via);
  bool visited(int node) const { return stamp_[node] == epoch_; }
  void push_unit(ArcId id);

  std::size_t n_ = 0;
  std::int64_t m_ = 0;
  std::int64_t side_capacity_ = 1;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> adjacency_;
  std::vector<ArcId> source_arcs_;
  std::vector<ArcId> middle_arcs_;
  std::size_t side_arcs_ = 0;
  std::int64_t last_desirability_ = 0;
  bool has_batches_ = false;
  Counters counters_;

  // Search state.
  std::vector<std::uint32_t> stamp_;
  std::vector<ArcId> parent_;
  std::vector<int> queue_;
  std::size_t queue_head_ = 0;
  std::uint32_t epoch_ = 0;
  int search_unit_ = 0;
  bool search_active_ = false;
  bool search_found_ = false;
};

// Network with exactly the side arcs of desirability >= threshold, after one
// augmenting-path pass from every a_j. Returns (flow value, network).
std::pair<std::int64_t, FlowNetwork> max_flow_at_threshold(const ScaledProblem& p, std::int64_t threshold,
                                                           MiddleCapacity middle = MiddleCapacity::kUnit);

}  // namespace twoway

#pragma once

// Random-instance benchmark: mean and spread of optimum discrepancies plus
// flow-engine operation counts, per (n, m).

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "twoway/solver.hpp"

namespace twoway {

struct SampleStats {
  double mean = 0.0;
  std::optional<double> stddev;  // square root of the unbiased variance; empty for one sample
};

SampleStats stats(std::span<const double> samples);

struct StatsRow {
  int n = 0;
  int m = 0;
  int runs = 0;
  SampleStats discrepancy;
  // Mean counter values divided by n.
  double arcs_added = 0.0;
  double batches = 0.0;
  double bfs_visits = 0.0;
  double augmentations = 0.0;
  std::int64_t rejections = 0;
};

struct BenchConfig {
  int n = 10;
  std::vector<int> m_values;  // empty: default_m_values(n)
  int runs = 0;               // 0: default_runs(n)
  std::int64_t max_draw = 1'000'000;
  std::uint64_t seed = 1;
  int threads = 1;
  SolveOptions solve;
};

// 1, 2, floor(lg n), floor(sqrt n), n/2, deduplicated and limited to [1, n-1].
std::vector<int> default_m_values(int n);
// min(10^6 / n, 10^4).
int default_runs(int n);

// Instance r of row m uses seed derive_seed(seed, (n << 32) | m, r), so
// results do not depend on the thread count.
StatsRow bench_row(const BenchConfig& config, int m);
std::vector<StatsRow> run_bench(const BenchConfig& config);

void write_table(std::ostream& os, std::span<const StatsRow> rows);
// Columns: n,m,runs,mean,std,arcs_added,batches,bfs_visits,augmentations.
void write_csv(std::ostream& os, std::span<const StatsRow> rows);

}  // namespace twoway

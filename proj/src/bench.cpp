#include "twoway/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "twoway/errors.hpp"
#include "twoway/generators.hpp"

namespace twoway {
namespace {

struct RunOutcome {
  double optimum = 0.0;
  Counters counters;
  int rejections = 0;
};

RunOutcome run_one(const BenchConfig& config, int m, int index) {
  RandomSpec spec;
  spec.n = config.n;
  spec.m = m;
  spec.max_draw = config.max_draw;
  spec.seed = derive_seed(config.seed, (static_cast<std::uint64_t>(config.n) << 32) | static_cast<std::uint32_t>(m),
                          static_cast<std::uint64_t>(index));
  const RandomInstance instance = random_instance_with_stats(spec);
  const SolveResult result = solve_optimal(instance.problem, config.solve);
  return {result.optimum.to_double(), result.counters, instance.rejections};
}

std::string format_fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

}  // namespace

SampleStats stats(std::span<const double> samples) {
  if (samples.empty()) throw InputError("statistics of an empty sample");
  long double sum = 0.0L;
  for (const double x : samples) sum += x;
  const long double mean = sum / static_cast<long double>(samples.size());
  SampleStats out;
  out.mean = static_cast<double>(mean);
  if (samples.size() > 1) {
    long double squares = 0.0L;
    for (const double x : samples) squares += (x - mean) * (x - mean);
    out.stddev = static_cast<double>(std::sqrt(squares / static_cast<long double>(samples.size() - 1)));
  }
  return out;
}

std::vector<int> default_m_values(int n) {
  const int lg = n >= 1 ? static_cast<int>(std::floor(std::log2(static_cast<double>(n)))) : 0;
  const int root = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
  std::vector<int> out;
  for (const int m : {1, 2, lg, root, n / 2}) {
    if (m >= 1 && m < n && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

int default_runs(int n) { return std::max(1, std::min(1'000'000 / std::max(n, 1), 10'000)); }

StatsRow bench_row(const BenchConfig& config, int m) {
  if (config.n < 2) throw InputError("bench needs n >= 2");
  if (m < 1 || m >= config.n) throw InputError("bench needs 1 <= m < n");
  const int runs = config.runs > 0 ? config.runs : default_runs(config.n);
  std::vector<RunOutcome> outcomes(runs);

  const int workers = std::clamp(config.threads, 1, runs);
  if (workers == 1) {
    for (int r = 0; r < runs; ++r) outcomes[r] = run_one(config, m, r);
  } else {
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int r = w; r < runs; r += workers) outcomes[r] = run_one(config, m, r);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  StatsRow row;
  row.n = config.n;
  row.m = m;
  row.runs = runs;
  std::vector<double> optima;
  optima.reserve(runs);
  long double arcs = 0, batches = 0, visits = 0, augmentations = 0;
  for (const RunOutcome& outcome : outcomes) {
    optima.push_back(outcome.optimum);
    arcs += outcome.counters.arcs_added;
    batches += outcome.counters.batches_added;
    visits += outcome.counters.bfs_arc_visits;
    augmentations += outcome.counters.augmentations;
    row.rejections += outcome.rejections;
  }
  row.discrepancy = stats(optima);
  const long double scale = static_cast<long double>(runs) * config.n;
  row.arcs_added = static_cast<double>(arcs / scale);
  row.batches = static_cast<double>(batches / scale);
  row.bfs_visits = static_cast<double>(visits / scale);
  row.augmentations = static_cast<double>(augmentations / scale);
  return row;
}

std::vector<StatsRow> run_bench(const BenchConfig& config) {
  const std::vector<int> ms = config.m_values.empty() ? default_m_values(config.n) : config.m_values;
  std::vector<StatsRow> rows;
  for (const int m : ms) rows.push_back(bench_row(config, m));
  return rows;
}

void write_table(std::ostream& os, std::span<const StatsRow> rows) {
  os << "     n      m    runs  discrepancy          visits/n    arcs/n\n";
  for (const StatsRow& row : rows) {
    char line[160];
    const std::string spread = row.discrepancy.stddev ? format_fixed(*row.discrepancy.stddev, 3) : std::string("-");
    std::snprintf(line, sizeof(line), "%6d %6d %7d  %s +- %-8s %10.3f %9.3f\n", row.n, row.m, row.runs,
                  format_fixed(row.discrepancy.mean, 3).c_str(), spread.c_str(), row.bfs_visits, row.arcs_added);
    os << line;
  }
}

void write_csv(std::ostream& os, std::span<const StatsRow> rows) {
  os << "n,m,runs,mean,std,arcs_added,batches,bfs_visits,augmentations\n";
  for (const StatsRow& row : rows) {
    os << row.n << ',' << row.m << ',' << row.runs << ',' << format_fixed(row.discrepancy.mean, 6) << ','
       << (row.discrepancy.stddev ? format_fixed(*row.discrepancy.stddev, 6) : std::string()) << ','
       << format_fixed(row.arcs_added, 6) << ',' << format_fixed(row.batches, 6) << ','
       << format_fixed(row.bfs_visits, 6) << ',' << format_fixed(row.augmentations, 6) << '\n';
  }
}

}  // namespace twoway

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "twoway/bench.hpp"
#include "twoway/generators.hpp"
#include "twoway/oracle.hpp"
#include "twoway/solver.hpp"

namespace {

using namespace twoway;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Appends to the detail and clears pass on failure.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      verdict_.pass = false;
      if (failures_++ < 3) note("FAILED " + what);
    }
  }
  void note(const std::string& text) {
    if (!verdict_.detail.empty()) verdict_.detail += "; ";
    verdict_.detail += text;
  }
  Verdict result() const { return verdict_; }

 private:
  Verdict verdict_;
  int failures_ = 0;
};

std::string fmt(const char* format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), format, value);
  return buffer;
}

int worker_count() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

ScaledProblem seeded(std::uint64_t family, std::uint64_t index, int min_n, int max_n) {
  Rng rng(derive_seed(2026, family, index));
  RandomSpec spec;
  spec.n = static_cast<int>(rng.uniform(min_n, max_n));
  spec.m = static_cast<int>(rng.uniform(1, std::max(1, spec.n / 2)));
  spec.seed = derive_seed(2026, family + 1000, index);
  return random_instance(spec);
}

Verdict worked_example() {
  Check c;
  const ScaledProblem p = worked_example7();
  solve_optimal(p);  // warm caches
  const auto start = Clock::now();
  const SolveResult r = solve_optimal(p);
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  const auto& x = r.rounding.bits;
  c.require(r.optimum == Fraction(20, 28), "optimum " + r.optimum.to_string());
  c.require(r.threshold == 8, "threshold " + std::to_string(r.threshold) + "/28");
  c.require(x[0] + x[1] == 1 && x[2] == 1 && x[3] + x[4] == 0 && x[5] + x[6] == 1, "rounding pattern");
  c.require(ms < 1.0, "runtime under 1 ms");
  std::string bits;
  for (const auto b : x) bits += static_cast<char>('0' + b);
  c.note("optimum " + r.optimum.to_string() + ", threshold 8/28, bits " + bits + ", solve " + fmt("%.3f ms", ms));
  return c.result();
}

Verdict bottleneck() {
  Check c;
  const BottleneckResult b = bottleneck_assignment(worked_example7());
  c.require(b.value == Fraction(11, 28), "value " + b.value.to_string());
  c.require(!b.is_valid_rounding(), "matching rejected as rounding");
  c.require(b.middle_load[2] == 2, "u3->v3 demand 2");
  std::string pairs;
  for (const MatchedPair& pair : b.matching) {
    pairs += " a" + std::to_string(pair.left_unit) + "-b" + std::to_string(pair.right_unit) + "(x" +
             std::to_string(pair.element + 1) + ")";
  }
  c.note("value " + std::to_string(b.threshold) + "/28, matching" + pairs + ", u3->v3 demand " +
         std::to_string(b.middle_load[2]));
  return c.result();
}

Verdict tight_units() {
  Check c;
  const auto start = Clock::now();
  for (int m = 1; m <= 5; ++m) {
    const ScaledProblem p = theorem2_instance(m);
    const Fraction bound(2 * m + 1, 2 * m + 2);
    c.require(solve_optimal(p).optimum == bound, "solver m=" + std::to_string(m));
    c.require(oracle_optimal(p).optimum == bound, "oracle m=" + std::to_string(m));
  }
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  c.require(s < 1.0, "runtime under 1 s");
  c.note("m=1..5 equal (2m+1)/(2m+2) for solver and oracle, " + fmt("%.3f s", s));
  return c.result();
}

Verdict tight_elements() {
  Check c;
  const auto start = Clock::now();
  for (int n = 3; n <= 12; ++n) {
    const ScaledProblem p = theorem3_instance(n);
    const Fraction bound(n, n + 1);
    const Fraction solver = solve_optimal(p).optimum;
    const Fraction oracle = oracle_optimal(p).optimum;
    c.require(solver == oracle && solver == bound, "n=" + std::to_string(n) + " solver " + solver.to_string() +
                                                       " oracle " + oracle.to_string());
  }
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  c.require(s < 10.0, "runtime under 10 s");
  c.note("n=3..12 equal n/(n+1) for solver and oracle, " + fmt("%.3f s", s));
  return c.result();
}

Verdict oracle_equivalence() {
  Check c;
  const auto start = Clock::now();
  int agree = 0;
  for (int i = 0; i < 200; ++i) {
    const ScaledProblem p = seeded(5, i, 2, 14);
    const Fraction solver = solve_optimal(p).optimum;
    const Fraction oracle = oracle_optimal(p).optimum;
    c.require(solver == oracle, "instance " + std::to_string(i));
    agree += solver == oracle;
  }
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  c.require(s < 60.0, "runtime under 1 min");
  c.note(std::to_string(agree) + "/200 exact matches, " + fmt("%.2f s", s));
  return c.result();
}

Verdict bound_suite() {
  Check c;
  const auto start = Clock::now();
  int above_half = 0;
  for (int i = 0; i < 1000; ++i) {
    ScaledProblem p = seeded(6, i, 2, 200);
    // Every other instance is complemented so m > n/2 is covered too.
    if (i % 2 == 1) p = complement(p);
    const std::int64_t n = static_cast<std::int64_t>(p.size());
    above_half += 2 * p.m > n;
    const Fraction opt = solve_optimal(p).optimum;
    const std::string tag = "instance " + std::to_string(i);
    c.require(opt <= Fraction(2 * p.m + 1, 2 * p.m + 2), tag + " unit bound");
    c.require(opt <= Fraction(2 * (n - p.m) + 1, 2 * (n - p.m) + 2), tag + " complement bound");
    c.require(opt <= Fraction(n - 1, n), tag + " element bound");
    c.require(opt >= Fraction(scaled_lower_bound(p), p.d), tag + " lower bound");
  }
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  c.require(s < 60.0, "runtime under 1 min");
  c.note("1000 instances (" + std::to_string(above_half) + " with m > n/2) within all bounds, " + fmt("%.2f s", s));
  return c.result();
}

Verdict table_replication() {
  Check c;
  const auto start = Clock::now();
  struct Row {
    int n;
    int runs;
    std::vector<int> ms;
    std::vector<double> expected;
  };
  const std::vector<Row> rows{{10, 10'000, {1, 2, 3, 5}, {.566, .619, .627, .622}},
                              {100, 1'000, {1, 2, 6, 10, 50}, {.537, .575, .664, .710, .759}}};
  std::ostringstream means;
  for (const Row& row : rows) {
    BenchConfig config;
    config.n = row.n;
    config.runs = row.runs;
    config.max_draw = 1'000'000;
    config.threads = worker_count();
    means << " n=" << row.n << ":";
    for (std::size_t i = 0; i < row.ms.size(); ++i) {
      const StatsRow stats = bench_row(config, row.ms[i]);
      const double mean = stats.discrepancy.mean;
      c.require(std::abs(mean - row.expected[i]) <= 0.01,
                "n=" + std::to_string(row.n) + " m=" + std::to_string(row.ms[i]) + fmt(" mean %.4f", mean));
      means << ' ' << fmt("%.3f", mean);
    }
  }
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  c.note("means" + means.str() + " (all within 0.01), " + fmt("%.1f s", s));
  return c.result();
}

Verdict fixed_bits() {
  Check c;
  int pairs = 0;
  for (int i = 0; i < 50; ++i) {
    const ScaledProblem p = seeded(8, i, 2, 12);
    for (std::size_t k = 0; k < p.size(); ++k) {
      for (const int bit : {0, 1}) {
        ++pairs;
        const std::string tag = "instance " + std::to_string(i) + " k=" + std::to_string(k + 1);
        try {
          const Rounding r = solve_fixed(p, k, bit);
          c.require(r.bits[k] == bit, tag + " bit honored");
          c.require(discrepancy(p, r).value < Fraction(1, 1), tag + " discrepancy below 1");
        } catch (const std::exception& e) {
          c.require(false, tag + ": " + e.what());
        }
        OracleOptions options;
        options.fixed = std::pair{k, bit};
        c.require(oracle_optimal(p, options).valid_count > 0, tag + " oracle class nonempty");
      }
    }
  }
  c.note(std::to_string(pairs) + " (k, bit) pairs on 50 instances solved and confirmed");
  return c.result();
}

Verdict matching_correspondence() {
  Check c;
  std::vector<std::pair<std::string, BipartiteGraph>> graphs;
  graphs.emplace_back("K2,2", BipartiteGraph(2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  std::vector<std::pair<int, int>> k33;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) k33.emplace_back(i, j);
  }
  graphs.emplace_back("K3,3", BipartiteGraph(3, k33));
  graphs.emplace_back("K2,2+K1,1", BipartiteGraph(3, {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 3}}));
  graphs.emplace_back("8-cycle",
                      BipartiteGraph(4, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}, {4, 1}}));
  graphs.emplace_back("fan+K1,1",
                      BipartiteGraph(4, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 4}}));
  std::ostringstream counts;
  for (const auto& [name, g] : graphs) {
    const std::int64_t matchings = count_perfect_matchings(g);
    const std::int64_t valid = oracle_optimal(from_bipartite(g)).valid_count;
    c.require(valid == matchings, name);
    counts << ' ' << name << '=' << valid << '/' << matchings;
  }
  c.note("valid roundings/perfect matchings:" + counts.str());
  return c.result();
}

Verdict search_effort() {
  Check c;
  std::vector<double> per_n;
  std::ostringstream values;
  for (const int n : {100, 1000, 10'000}) {
    BenchConfig config;
    config.n = n;
    config.runs = 100;
    config.threads = worker_count();
    const StatsRow row = bench_row(config, 1);
    per_n.push_back(row.bfs_visits);
    values << " n=" << n << ':' << fmt("%.4f", row.bfs_visits);
  }
  c.require(per_n[0] > per_n[1] && per_n[1] > per_n[2], "strict decrease");
  c.note("bfs_arc_visits/n for m=1:" + values.str());
  return c.result();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"worked example", worked_example},
      {"bottleneck comparison", bottleneck},
      {"(2m+1)/(2m+2) tightness", tight_units},
      {"n/(n+1) tightness", tight_elements},
      {"oracle equivalence", oracle_equivalence},
      {"bound suite", bound_suite},
      {"empirical optimum table", table_replication},
      {"fixed-bit roundings", fixed_bits},
      {"matching correspondence", matching_correspondence},
      {"search effort per element", search_effort},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s %2zu %-28s %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "twoway/bench.hpp"
#include "twoway/errors.hpp"
#include "twoway/generators.hpp"
#include "twoway/json_io.hpp"
#include "twoway/oracle.hpp"
#include "twoway/solver.hpp"

namespace twoway::cli {
namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  try {
    return json::parse(buffer.str());
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

void report(std::ostream& err, const char* kind, const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

std::pair<std::size_t, int> parse_fix(const std::string& text, const ScaledProblem& p) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw InputError("--fix expects k=bit");
  const Rational k = parse_rational(text.substr(0, eq));
  const Rational bit = parse_rational(text.substr(eq + 1));
  if (k.den != 1 || k.num < 1 || static_cast<std::size_t>(k.num) > p.original_size()) {
    throw InputError("--fix index out of range");
  }
  if (bit.den != 1 || (bit.num != 0 && bit.num != 1)) throw InputError("--fix bit must be 0 or 1");
  return {static_cast<std::size_t>(k.num - 1), static_cast<int>(bit.num)};
}

struct SolveArgs {
  std::string input;
  bool feasible_only = false;
  bool no_prune = false;
  bool bottleneck = false;
  std::string fix;
};

struct OracleArgs {
  std::string input;
  std::size_t max_n = 24;
};

struct GenArgs {
  int m = 1;
  int n = 10;
  std::int64_t max_draw = 1'000'000;
  std::uint64_t seed = 1;
  std::string file;
};

struct BenchArgs {
  int n = 10;
  std::vector<int> m_list;
  int runs = 0;
  std::int64_t max_draw = 1'000'000;
  std::uint64_t seed = 1;
  int threads = 1;
  bool no_prune = false;
  std::string csv;
};

void cmd_solve(const SolveArgs& args, std::ostream& out) {
  const ScaledProblem p = problem_from_json(read_json(args.input));
  if (args.bottleneck) {
    out << bottleneck_to_json(bottleneck_assignment(p)).dump() << '\n';
    return;
  }
  if (!args.fix.empty()) {
    const auto [k, bit] = parse_fix(args.fix, p);
    out << solution_to_json(p, solve_fixed(p, k, bit), false, 1, Counters{}).dump() << '\n';
    return;
  }
  if (args.feasible_only) {
    out << solution_to_json(p, solve_feasible(p), false, 1, Counters{}).dump() << '\n';
    return;
  }
  SolveOptions options;
  options.prune = !args.no_prune;
  out << solution_to_json(p, solve_optimal(p, options)).dump() << '\n';
}

void cmd_oracle(const OracleArgs& args, std::ostream& out) {
  const ScaledProblem p = problem_from_json(read_json(args.input));
  OracleOptions options;
  options.max_elements = args.max_n;
  out << oracle_to_json(p, oracle_optimal(p, options)).dump() << '\n';
}

void cmd_bench(const BenchArgs& args, std::ostream& out) {
  BenchConfig config;
  config.n = args.n;
  config.m_values = args.m_list;
  config.runs = args.runs;
  config.max_draw = args.max_draw;
  config.seed = args.seed;
  config.threads = args.threads;
  config.solve.prune = !args.no_prune;
  const std::vector<StatsRow> rows = run_bench(config);
  if (args.csv == "-") {
    write_csv(out, rows);
    return;
  }
  write_table(out, rows);
  if (!args.csv.empty()) {
    std::ofstream file(args.csv);
    if (!file) throw InputError("cannot write '" + args.csv + "'");
    write_csv(file, rows);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact two-way rounding: optimal solver, oracle, generators and benchmark"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Round an instance with minimum discrepancy");
  solve->add_option("input", solve_args.input, "Instance JSON file ('-' for stdin)")->required();
  solve->add_flag("--feasible-only", solve_args.feasible_only, "Any rounding with discrepancy < 1");
  solve->add_option("--fix", solve_args.fix, "Force element k (1-based) to floor+bit, as k=bit");
  solve->add_flag("--no-prune", solve_args.no_prune, "Consider every side arc");
  solve->add_flag("--bottleneck", solve_args.bottleneck, "Solve the bottleneck assignment relaxation instead");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum for small instances");
  oracle->add_option("input", oracle_args.input, "Instance JSON file ('-' for stdin)")->required();
  oracle->add_option("--max-n", oracle_args.max_n, "Largest instance to enumerate")->capture_default_str();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Emit an instance JSON");
  gen->require_subcommand(1);
  auto* gen_theorem2 = gen->add_subcommand("theorem2", "Tight instance for the (2m+1)/(2m+2) bound");
  gen_theorem2->add_option("--m", gen_args.m)->required();
  auto* gen_theorem3 = gen->add_subcommand("theorem3", "Tight instance for the n/(n+1) bound");
  gen_theorem3->add_option("--n", gen_args.n)->required();
  auto* gen_random = gen->add_subcommand("random", "Seeded random instance");
  gen_random->add_option("--n", gen_args.n)->required();
  gen_random->add_option("--m", gen_args.m)->required();
  gen_random->add_option("--max", gen_args.max_draw, "Upper bound of the y draws")->capture_default_str();
  gen_random->add_option("--seed", gen_args.seed)->capture_default_str();
  auto* gen_bipartite = gen->add_subcommand("bipartite", "Instance whose roundings mirror perfect matchings");
  gen_bipartite->add_option("--file", gen_args.file, "{\"m\": int, \"edges\": [[u,v],...]}")->required();
  auto* gen_example7 = gen->add_subcommand("example7", "The n=7, m=3 fixture");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Optimum discrepancy statistics on random instances");
  bench->add_option("--n", bench_args.n)->required();
  bench->add_option("--m-list", bench_args.m_list, "Comma-separated m values")->delimiter(',');
  bench->add_option("--runs", bench_args.runs, "Instances per m (default min(10^6/n, 10^4))");
  bench->add_option("--max", bench_args.max_draw)->capture_default_str();
  bench->add_option("--seed", bench_args.seed)->capture_default_str();
  bench->add_option("--threads", bench_args.threads)->capture_default_str();
  bench->add_flag("--no-prune", bench_args.no_prune);
  bench->add_option("--csv", bench_args.csv, "Also write CSV to this file ('-': CSV only, to stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    report(err, "input", e.what());
    return kInputError;
  }

  try {
    if (*solve) {
      cmd_solve(solve_args, out);
    } else if (*oracle) {
      cmd_oracle(oracle_args, out);
    } else if (*gen) {
      ScaledProblem p;
      if (*gen_theorem2) p = theorem2_instance(gen_args.m);
      if (*gen_theorem3) p = theorem3_instance(gen_args.n);
      if (*gen_random) p = random_instance({gen_args.n, gen_args.m, gen_args.max_draw, gen_args.seed});
      if (*gen_bipartite) p = from_bipartite(bipartite_from_json(read_json(gen_args.file)));
      if (*gen_example7) p = worked_example7();
      out << problem_to_json(p).dump() << '\n';
    } else if (*bench) {
      cmd_bench(bench_args, out);
    }
  } catch (const InputError& e) {
    report(err, "input", e.what());
    return kInputError;
  } catch (const GuardExceeded& e) {
    report(err, "guard", e.what());
    return kGuardExceeded;
  } catch (const std::exception& e) {
    report(err, "internal", e.what());
    return kInternal;
  }
  return kOk;
}

}  // namespace twoway::cli

#pragma once

// JSON encodings of instances, solutions and oracle results.
//
// Instance: {"denominator": d, "numerators": [...], "floors": [...]?, "sigma": [...]}
//       or  {"values": ["0.1", "3/28", 2, ...], "sigma": [...]}
// sigma is 1-based in JSON. Padding elements are never written; reading an
// instance re-applies normalization.

#include <json.hpp>

#include "twoway/oracle.hpp"
#include "twoway/problem.hpp"
#include "twoway/solver.hpp"

namespace twoway {

ScaledProblem problem_from_json(const nlohmann::json& doc);
nlohmann::json problem_to_json(const ScaledProblem& p);

BipartiteGraph bipartite_from_json(const nlohmann::json& doc);

nlohmann::json fraction_to_json(const Fraction& f);
nlohmann::json counters_to_json(const Counters& c);

// {"xbar", "discrepancy", "optimal", "threshold", "counters"}; xbar has the
// integer parts folded back in.
nlohmann::json solution_to_json(const ScaledProblem& p, const Rounding& r, bool optimal, std::int64_t threshold,
                                const Counters& counters);
nlohmann::json solution_to_json(const ScaledProblem& p, const SolveResult& result);

nlohmann::json oracle_to_json(const ScaledProblem& p, const OracleResult& result);
nlohmann::json bottleneck_to_json(const BottleneckResult& result);

}  // namespace twoway

#include "twoway/json_io.hpp"

#include <limits>

#include "twoway/errors.hpp"

namespace twoway {
namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::int64_t as_integer(const json& value, const char* what) {
  if (!value.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return value.get<std::int64_t>();
}

std::vector<std::int64_t> integer_array(const json& value, const char* what) {
  if (!value.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  out.reserve(value.size());
  for (const json& item : value) out.push_back(as_integer(item, what));
  return out;
}

std::vector<int> read_sigma(const json& doc) {
  std::vector<int> out;
  for (const std::int64_t s : integer_array(require(doc, "sigma"), "sigma")) {
    if (s < 1 || s > std::numeric_limits<int>::max()) throw InputError("sigma entries must be 1-based indices");
    out.push_back(static_cast<int>(s - 1));
  }
  return out;
}

}  // namespace

ScaledProblem problem_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  const std::vector<int> sigma = read_sigma(doc);
  std::vector<Rational> values;
  if (doc.contains("values")) {
    const json& raw = doc.at("values");
    if (!raw.is_array()) throw InputError("values must be an array");
    for (const json& item : raw) {
      if (item.is_string()) {
        values.push_back(parse_rational(item.get<std::string>()));
      } else if (item.is_number_integer()) {
        values.push_back({item.get<std::int64_t>(), 1});
      } else {
        throw InputError("values must be strings or integers; binary floating point is not accepted");
      }
    }
  } else {
    const std::int64_t d = as_integer(require(doc, "denominator"), "denominator");
    if (d <= 0) throw InputError("denominator must be positive");
    const std::vector<std::int64_t> numerators = integer_array(require(doc, "numerators"), "numerators");
    std::vector<std::int64_t> floors(numerators.size(), 0);
    if (doc.contains("floors")) {
      floors = integer_array(doc.at("floors"), "floors");
      if (floors.size() != numerators.size()) throw InputError("floors and numerators differ in length");
    }
    for (std::size_t k = 0; k < numerators.size(); ++k) {
      values.push_back({checked_add(checked_mul(floors[k], d), numerators[k]), d});
    }
  }
  return normalize(values, sigma);
}

json problem_to_json(const ScaledProblem& p) {
  const std::size_t n = p.original_size();
  std::vector<int> sigma;
  for (std::size_t pos = 0; pos < p.size(); ++pos) {
    if (static_cast<std::size_t>(p.sigma[pos]) < n) sigma.push_back(p.sigma[pos] + 1);
  }
  return json{{"denominator", p.d},
              {"numerators", std::vector<std::int64_t>(p.y.begin(), p.y.begin() + n)},
              {"floors", std::vector<std::int64_t>(p.floors.begin(), p.floors.begin() + n)},
              {"sigma", sigma}};
}

BipartiteGraph bipartite_from_json(const json& doc) {
  const std::int64_t m = as_integer(require(doc, "m"), "m");
  const json& raw = require(doc, "edges");
  if (!raw.is_array()) throw InputError("edges must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const json& edge : raw) {
    const std::vector<std::int64_t> ends = integer_array(edge, "edge");
    if (ends.size() != 2) throw InputError("each edge must be a [left, right] pair");
    edges.emplace_back(static_cast<int>(ends[0]), static_cast<int>(ends[1]));
  }
  if (m < 1 || m > 1'000'000) throw InputError("m out of range");
  return BipartiteGraph(static_cast<int>(m), std::move(edges));
}

json fraction_to_json(const Fraction& f) { return json{{"num", f.num()}, {"den", f.den()}}; }

json counters_to_json(const Counters& c) {
  return json{{"arcs_added", c.arcs_added},
              {"batches_added", c.batches_added},
              {"bfs_arc_visits", c.bfs_arc_visits},
              {"augmentations", c.augmentations}};
}

json solution_to_json(const ScaledProblem& p, const Rounding& r, bool optimal, std::int64_t threshold,
                      const Counters& counters) {
  return json{{"xbar", restore(p, r)},
              {"discrepancy", fraction_to_json(discrepancy(p, r).value)},
              {"optimal", optimal},
              {"threshold", threshold},
              {"counters", counters_to_json(counters)}};
}

json solution_to_json(const ScaledProblem& p, const SolveResult& result) {
  return solution_to_json(p, result.rounding, true, result.threshold, result.counters);
}

json oracle_to_json(const ScaledProblem& p, const OracleResult& result) {
  json witnesses = json::array();
  for (const Rounding& r : result.witnesses) witnesses.push_back(restore(p, r));
  return json{{"optimum", fraction_to_json(result.optimum)},
              {"valid_count", result.valid_count},
              {"witness_count", result.witnesses.size()},
              {"witnesses", witnesses}};
}

json bottleneck_to_json(const BottleneckResult& result) {
  json matching = json::array();
  for (const MatchedPair& pair : result.matching) {
    matching.push_back({{"a", pair.left_unit}, {"b", pair.right_unit}, {"via", pair.element + 1}});
  }
  return json{{"value", fraction_to_json(result.value)},
              {"threshold", result.threshold},
              {"matching", matching},
              {"middle_load", result.middle_load},
              {"valid_rounding", result.is_valid_rounding()}};
}

}  // namespace twoway

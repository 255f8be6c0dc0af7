#include "twoway/problem.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "twoway/errors.hpp"

namespace twoway {
namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InputError("not an exact rational: '" + std::string(whole) + "'");
  }
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InputError("integer out of range in '" + std::string(whole) + "'");
  }
  return out;
}

std::int64_t distance_to_grid(std::int64_t value, std::int64_t d) {
  const std::int64_t r = value % d;
  return std::min(r, d - r);
}

std::vector<std::int64_t> running_sums(const std::vector<std::int64_t>& y, std::span<const int> order) {
  std::vector<std::int64_t> out(y.size() + 1, 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const std::size_t k = order.empty() ? i : static_cast<std::size_t>(order[i]);
    out[i + 1] = out[i] + y[k];
  }
  return out;
}

bool is_permutation(std::span<const int> sigma) {
  std::vector<bool> seen(sigma.size(), false);
  for (int s : sigma) {
    if (s < 0 || static_cast<std::size_t>(s) >= sigma.size() || seen[s]) return false;
    seen[s] = true;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational out;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    out.num = parse_digits(body.substr(0, slash), text);
    out.den = parse_digits(body.substr(slash + 1), text);
    if (out.den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = body.substr(0, dot);
    const std::string_view frac_part = body.substr(dot + 1);
    if (frac_part.size() > 18) throw GuardExceeded("too many decimal places in '" + std::string(text) + "'");
    out.den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) out.den *= 10;
    const std::int64_t whole = int_part.empty() ? 0 : parse_digits(int_part, text);
    const std::int64_t frac = parse_digits(frac_part, text);
    out.num = checked_add(checked_mul(whole, out.den), frac);
  } else {
    out.num = parse_digits(body, text);
    out.den = 1;
  }
  if (negative) out.num = -out.num;
  return out;
}

std::vector<int> ScaledProblem::inverse_sigma() const {
  std::vector<int> inv(sigma.size());
  for (std::size_t pos = 0; pos < sigma.size(); ++pos) inv[sigma[pos]] = static_cast<int>(pos);
  return inv;
}

std::vector<int> sigma_from_one_based(std::span<const int> one_based) {
  std::vector<int> out(one_based.begin(), one_based.end());
  for (int& s : out) --s;
  return out;
}

std::vector<int> sigma_to_one_based(std::span<const int> zero_based) {
  std::vector<int> out(zero_based.begin(), zero_based.end());
  for (int& s : out) ++s;
  return out;
}

ScaledProblem normalize(std::span<const Rational> values, std::span<const int> sigma) {
  if (values.empty()) throw InputError("empty instance");
  if (values.size() != sigma.size()) throw InputError("sigma length differs from number of values");
  if (!is_permutation(sigma)) throw InputError("sigma is not a permutation");

  std::int64_t d = 1;
  for (const Rational& v : values) {
    if (v.den == 0) throw InputError("zero denominator");
    d = checked_lcm(d, std::abs(v.den));
  }

  ScaledProblem p;
  p.d = d;
  p.sigma.assign(sigma.begin(), sigma.end());
  p.y.reserve(values.size() + 1);
  p.floors.reserve(values.size() + 1);
  std::int64_t total = 0;
  for (const Rational& v : values) {
    const std::int64_t num = v.den < 0 ? -v.num : v.num;
    const std::int64_t scaled = checked_mul(num, d / std::abs(v.den));
    const std::int64_t whole = floor_div(scaled, d);
    p.floors.push_back(whole);
    p.y.push_back(scaled - whole * d);
    total = checked_add(total, p.y.back());
  }
  if (const std::int64_t rest = total % d; rest != 0) {
    p.y.push_back(d - rest);
    p.floors.push_back(0);
    p.sigma.push_back(static_cast<int>(values.size()));
    p.padded = true;
    total += d - rest;
  }
  p.m = total / d;

  std::int64_t guard;
  if (__builtin_mul_overflow(d, p.m + 1, &guard) || guard >= kOverflowGuard) {
    throw GuardExceeded("common denominator too large: d*(m+1) must stay below 2^62");
  }
  return p;
}

ScaledProblem normalize(std::span<const std::string> values, std::span<const int> sigma) {
  std::vector<Rational> parsed;
  parsed.reserve(values.size());
  for (const std::string& v : values) parsed.push_back(parse_rational(v));
  return normalize(parsed, sigma);
}

PrefixSums prefix_sums(const ScaledProblem& p) {
  return PrefixSums{running_sums(p.y, {}), running_sums(p.y, p.sigma)};
}

std::int64_t scaled_discrepancy(const ScaledProblem& p, const PrefixSums& sums,
                                std::span<const std::uint8_t> bits) {
  std::int64_t worst = 0;
  std::int64_t rounded = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    rounded += bits[k];
    worst = std::max(worst, std::abs(sums.natural[k + 1] - rounded * p.d));
  }
  rounded = 0;
  for (std::size_t pos = 0; pos < bits.size(); ++pos) {
    rounded += bits[p.sigma[pos]];
    worst = std::max(worst, std::abs(sums.permuted[pos + 1] - rounded * p.d));
  }
  return worst;
}

DiscrepancyReport discrepancy(const ScaledProblem& p, const Rounding& r) {
  if (r.bits.size() != p.size()) throw InputError("rounding length differs from problem size");
  const PrefixSums sums = prefix_sums(p);
  DiscrepancyReport report;
  std::int64_t natural = 0;
  std::int64_t permuted = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    natural += r.bits[k];
    permuted += r.bits[p.sigma[k]];
    const std::int64_t dev_natural = std::abs(sums.natural[k + 1] - natural * p.d);
    const std::int64_t dev_permuted = std::abs(sums.permuted[k + 1] - permuted * p.d);
    if (dev_natural > report.scaled) {
      report.scaled = dev_natural;
      report.index = k + 1;
      report.ordering = Ordering::kNatural;
    }
    if (dev_permuted > report.scaled) {
      report.scaled = dev_permuted;
      report.index = k + 1;
      report.ordering = Ordering::kPermuted;
    }
  }
  report.value = Fraction(report.scaled, p.d);
  return report;
}

std::int64_t scaled_lower_bound(const ScaledProblem& p) {
  const PrefixSums sums = prefix_sums(p);
  std::int64_t bound = 0;
  for (std::size_t k = 1; k <= p.size(); ++k) {
    bound = std::max({bound, distance_to_grid(sums.natural[k], p.d), distance_to_grid(sums.permuted[k], p.d)});
  }
  return bound;
}

ScaledProblem complement(const ScaledProblem& p) {
  ScaledProblem out = p;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.y[k] <= 0 || p.y[k] >= p.d) {
      throw InputError("complement requires 0 < x_k < 1 for every element (element " + std::to_string(k + 1) + ")");
    }
    out.y[k] = p.d - p.y[k];
  }
  out.m = static_cast<std::int64_t>(p.size()) - p.m;
  return out;
}

Rounding complement(const Rounding& r) {
  Rounding out = r;
  for (auto& b : out.bits) b = static_cast<std::uint8_t>(1 - b);
  return out;
}

std::vector<std::int64_t> restore(const ScaledProblem& p, const Rounding& r) {
  if (r.bits.size() != p.size()) throw InputError("rounding length differs from problem size");
  std::vector<std::int64_t> out(p.original_size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.floors[k] + r.bits[k];
  return out;
}

std::vector<Violation> validate(const ScaledProblem& p) {
  std::vector<Violation> out;
  if (p.d <= 0) {
    out.push_back({ViolationKind::kBadDenominator, "denominator must be positive"});
    return out;
  }
  const std::size_t n = p.size();
  if (p.floors.size() != n || p.sigma.size() != n) {
    out.push_back({ViolationKind::kSizeMismatch, "y, floors and sigma must have equal length"});
    return out;
  }
  std::int64_t total = 0;
  bool summable = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (p.y[k] < 0 || p.y[k] >= p.d) {
      out.push_back({ViolationKind::kOutOfRange, "y[" + std::to_string(k) + "] outside [0, d)"});
    }
    if (__builtin_add_overflow(total, p.y[k], &total)) summable = false;
  }
  if (!is_permutation(p.sigma)) out.push_back({ViolationKind::kNonBijective, "sigma is not a bijection"});
  std::int64_t md = 0;
  if (!summable || __builtin_mul_overflow(p.m, p.d, &md) || md != total) {
    out.push_back({ViolationKind::kSumViolation, "sum of y is not m * d"});
  }
  if (p.padded && (n == 0 || p.sigma.back() != static_cast<int>(n) - 1 || p.y.back() <= 0)) {
    out.push_back({ViolationKind::kPaddingInconsistent, "padding element must be last in both orders"});
  }
  std::int64_t guard = 0;
  if (__builtin_mul_overflow(p.d, p.m + 1, &guard) || guard >= kOverflowGuard) {
    out.push_back({ViolationKind::kOverflowGuard, "d * (m + 1) must stay below 2^62"});
  }
  return out;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kBadDenominator: return "bad-denominator";
    case ViolationKind::kSizeMismatch: return "size-mismatch";
    case ViolationKind::kOutOfRange: return "out-of-range";
    case ViolationKind::kNonBijective: return "non-bijective";
    case ViolationKind::kSumViolation: return "sum-violation";
    case ViolationKind::kPaddingInconsistent: return "padding-inconsistent";
    case ViolationKind::kOverflowGuard: return "overflow-guard";
  }
  return "unknown";
}

}  // namespace twoway

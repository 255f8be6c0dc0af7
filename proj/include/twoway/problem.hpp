#pragma once

// Exact representation of a two-way rounding instance.
//
// Every quantity is an integer in units of 1/d, where d is a common
// denominator of the inputs. Element indices are 0-based throughout the C++
// API; the permutation is stored 0-based as well, so sigma[pos] is the
// element that appears at position pos of the second ordering. Unit indices
// j (the a_j / b_j nodes of the flow network) run from 1 to m.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twoway/fraction.hpp"

namespace twoway {

// Unreduced input rational; the denominator is taken as given so that
// normalize() can honor the caller's choice of common denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// Parses "3/28", "-2", "0.125" or "12.5" exactly. Exponents and other
// floating-point spellings are rejected.
Rational parse_rational(std::string_view text);

// ScaledProblem: x_k = floors[k] + y[k] / d.
//
// Invariants (see validate()):
//   0 <= y[k] < d, sum(y) == m * d, sigma a bijection on [0, n),
//   padded => sigma.back() == n - 1 and y.back() > 0,
//   d * (m + 1) < 2^62.
struct ScaledProblem {
  std::int64_t d = 1;
  std::vector<std::int64_t> y;
  std::vector<std::int64_t> floors;
  std::vector<int> sigma;
  std::int64_t m = 0;
  bool padded = false;

  std::size_t size() const { return y.size(); }
  // Number of caller-supplied elements (excludes the padding element).
  std::size_t original_size() const { return padded ? y.size() - 1 : y.size(); }
  // Position of element k in the second ordering.
  std::vector<int> inverse_sigma() const;
};

// Y[k] = y[0] + ... + y[k-1] and Z[k] = y[sigma 0] + ... + y[sigma (k-1)],
// both of length n + 1 with Y[0] == Z[0] == 0.
struct PrefixSums {
  std::vector<std::int64_t> natural;
  std::vector<std::int64_t> permuted;
};

// The 0/1 part of a rounding; the reported value is floors[k] + bits[k].
struct Rounding {
  std::vector<std::uint8_t> bits;

  friend bool operator==(const Rounding&, const Rounding&) = default;
};

enum class Ordering { kNatural, kPermuted };

struct DiscrepancyReport {
  Fraction value;
  std::int64_t scaled = 0;  // value * d
  std::size_t index = 0;    // prefix length k in 1..n where the max occurs (0 if none)
  Ordering ordering = Ordering::kNatural;
};

constexpr std::int64_t kOverflowGuard = std::int64_t{1} << 62;

std::vector<int> sigma_from_one_based(std::span<const int> one_based);
std::vector<int> sigma_to_one_based(std::span<const int> zero_based);

// Splits off integer parts, scales to the lcm of the input denominators and
// appends a padding element when the fractional sum is not integral.
ScaledProblem normalize(std::span<const Rational> values, std::span<const int> sigma);
ScaledProblem normalize(std::span<const std::string> values, std::span<const int> sigma);

PrefixSums prefix_sums(const ScaledProblem& p);

DiscrepancyReport discrepancy(const ScaledProblem& p, const Rounding& r);
// Same as discrepancy() but reuses precomputed prefix sums; returns value * d.
std::int64_t scaled_discrepancy(const ScaledProblem& p, const PrefixSums& sums,
                                std::span<const std::uint8_t> bits);

// Largest scaled distance from a prefix sum to the nearest multiple of d;
// no rounding can do better than this.
std::int64_t scaled_lower_bound(const ScaledProblem& p);

// x_k -> 1 - x_k. Requires 0 < y[k] < d for every k.
ScaledProblem complement(const ScaledProblem& p);
Rounding complement(const Rounding& r);

// Rounded values floors[k] + bits[k] for the caller-supplied elements.
std::vector<std::int64_t> restore(const ScaledProblem& p, const Rounding& r);

enum class ViolationKind {
  kBadDenominator,
  kSizeMismatch,
  kOutOfRange,
  kNonBijective,
  kSumViolation,
  kPaddingInconsistent,
  kOverflowGuard,
};

struct Violation {
  ViolationKind kind;
  std::string detail;
};

std::vector<Violation> validate(const ScaledProblem& p);
std::string_view to_string(ViolationKind kind);

}  // namespace twoway

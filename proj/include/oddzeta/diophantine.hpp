#pragma once

/**
 * @file diophantine.hpp
 * @brief Certified continued fractions and executable approximation inequalities.
 *
 * Expansion runs on exact rational endpoints of the input enclosure, so a
 * partial quotient is only emitted when every point of the enclosure agrees on
 * it. Nothing here proves irrationality; the exclusion report only rules out
 * rationals with bounded denominators at the stated precision.
 */

#include "oddzeta/hreal.hpp"
#include "oddzeta/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oddzeta {

struct Convergent {
  BigInt p;
  BigInt q;
};

struct ContinuedFraction {
  std::string label;
  std::vector<BigInt> quotients;
  std::vector<Convergent> convergents;
  // Quotients guaranteed correct for every point of the input enclosure.
  std::size_t certified_terms = 0;
  // The input was an exact rational and its expansion ended.
  bool terminated = false;
};

/// Closed rational interval [lo, hi].
struct RationalInterval {
  BigRational lo;
  BigRational hi;
};

/// Expands every point of @p interval; stops at @p max_terms or at the first undetermined quotient.
/// Throws InsufficientPrecision when not even a_0 is determined.
ContinuedFraction cf_expand(const RationalInterval& interval, std::size_t max_terms, std::string label = {});
ContinuedFraction cf_expand(const HReal& alpha, std::size_t max_terms, std::string label = {});
/// Exact expansion; terminates with final convergent equal to @p value.
ContinuedFraction cf_expand(const BigRational& value, std::size_t max_terms, std::string label = {});

enum class CheckStatus { pass, fail };

struct InequalityCheck {
  std::size_t n = 0;
  BigInt p;
  BigInt q;
  BigInt q_next;
  RationalInterval residual;  // |alpha q_n - p_n| over the enclosure
  double residual_estimate = 0.0;
  CheckStatus lower = CheckStatus::pass;  // 1/(2 q_{n+1}) <= residual
  CheckStatus upper = CheckStatus::pass;  // residual <= 1/q_n
  bool passed() const { return lower == CheckStatus::pass && upper == CheckStatus::pass; }
};

/**
 * 1/(2 q_{n+1}) <= |alpha q_n - p_n| <= 1/q_n for every n with n+1 certified,
 * decided over the whole enclosure of @p alpha. Throws InsufficientPrecision
 * if an inequality boundary falls inside the enclosure.
 */
std::vector<InequalityCheck> check_two_sided_inequality(const ContinuedFraction& cf, const HReal& alpha);

struct BestApproximationReport {
  std::size_t n = 0;
  BigInt p;
  BigInt q;
  std::size_t scanned = 0;
  bool optimal = true;
  std::optional<long> witness_k;  // a k < q_n that beats the convergent, when optimal is false
  // How many k satisfied |pi (alpha k - m)| < 1 with m the nearest integer.
  std::size_t scaled_bound_holds = 0;
};

/// Exhaustive scan over 1 <= k <= q_n (m = nearest integer to alpha k). Requires q_n <= 10^6.
BestApproximationReport best_approx_bruteforce(const HReal& alpha, std::size_t n);
BestApproximationReport best_approx_bruteforce(const HReal& alpha, const ContinuedFraction& cf, std::size_t n);

struct ExclusionReport {
  BigInt denominator_bound;
  std::string epsilon;  // radius of the input enclosure
  // Smallest-denominator rational inside the enclosure.
  BigRational simplest;
  bool rational_found = false;  // simplest has denominator <= bound
  std::size_t convergents_examined = 0;
  std::string statement;
};

/// Requires radius * B^2 < 1/4.
ExclusionReport rational_exclusion(const HReal& alpha, const BigInt& denominator_bound);

/// Smallest-denominator rational in [lo, hi] (lo <= hi).
BigRational simplest_rational_between(const BigRational& lo, const BigRational& hi);

}  // namespace oddzeta

#pragma once

/**
 * @file zeta.hpp
 * @brief Zeta constants by independent routes.
 *
 * zeta_direct is the Euler-Maclaurin oracle; the exact even formula, the
 * single-series Lerch form for s = 3 (mod 4) and Ramanujan's two-series form
 * for zeta(5) are checked against it. Each route targets an absolute error of
 * 10^-(digits+2), so its value renders to @c digits significant digits, and
 * escalates the working precision geometrically until the target is met.
 */

#include "oddzeta/hreal.hpp"
#include "oddzeta/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace oddzeta {

enum class ZetaMethod { direct, euler_even, lerch_4n3, ramanujan_5, pi_split };

std::string_view to_string(ZetaMethod method);

struct ZetaResult {
  int s = 0;
  HReal value;
  ZetaMethod method = ZetaMethod::direct;
  // Series cutoff: N explicit terms for direct, M exponential terms for the Lerch routes.
  long truncation = 0;
  // Euler-Maclaurin correction depth (direct only).
  long correction_terms = 0;
  Bits precision{0};
  Digits target{0};
};

enum class TailSign { minus, plus };

/// Target absolute error 10^-(digits+2) for a D-digit result.
long target_decimal_exponent(Digits digits);

/// Lerch cutoff ceil(D ln 10 / 2 pi) + 4.
long lerch_cutoff(Digits digits);

/// zeta(s) for integer s >= 2 by Euler-Maclaurin-corrected partial summation.
ZetaResult zeta_direct(int s, Digits digits);

/// Euler-Maclaurin sum at precision @p bits for a real argument s > 1, with the
/// remainder bounded by twice the first omitted correction term.
HReal zeta_euler_maclaurin(const HReal& s, Bits bits, long* terms = nullptr, long* depth = nullptr);

/// even_zeta_coeff(n) * pi^(2n).
ZetaResult zeta_even_exact(int n, Digits digits);

/// sum_{m=1}^{M} 1 / (m^s (e^(2 pi m) -+ 1)); radius includes the tail bound 2 e^(-2 pi (M+1)).
HReal lerch_tail(int s, TailSign sign, long cutoff, Bits bits);

/// lerch_leading_coeff((s-1)/2) pi^s - 2 lerch_tail(s, minus). Throws WrongResidueClass for s = 1 (mod 4).
ZetaResult zeta_odd_lerch(int s, Digits digits);

/// pi^5/294 - (72/35) T_minus - (2/35) T_plus.
ZetaResult zeta5_ramanujan(Digits digits);

struct PiSplit {
  int s = 0;
  BigRational a;       // coefficient of pi^s
  HReal b;             // remainder
  bool degenerate = false;  // no rational coefficient known: a = 0, b = zeta(s)
  ZetaMethod source = ZetaMethod::pi_split;
  long truncation = 0;
};

/**
 * zeta(s) = a pi^s + b for odd s >= 3.
 *
 * s = 3 (mod 4) uses the Lerch coefficient and b = -2 T_minus; s = 5 uses
 * a = 1/294 and b = -(72/35) T_minus - (2/35) T_plus. Any other s = 1 (mod 4)
 * takes a from @p supplied_a (b is then zeta(s) - a pi^s numerically) or
 * falls back to the flagged degenerate split a = 0, b = zeta(s).
 */
PiSplit pi_split(int s, Digits digits, const std::optional<BigRational>& supplied_a = std::nullopt);

/// Default cutoff for the divisor series at @p bits: ceil(bits ln 2 / 2 pi) + 4.
long divisor_series_cutoff(Bits bits);

/// sum_{n=1}^{M} sigma_{-s}(n) e^(-2 pi n); radius includes (1 + 1/(s-1)) e^(-2 pi (M+1)) / (1 - e^(-2 pi)).
HReal sigma_divisor_series(int s, Bits bits, std::optional<long> cutoff = std::nullopt);

/// zeta'(-2n) = (-1)^n (2n)! zeta(2n+1) / (2 (2 pi)^(2n)).
HReal zeta_deriv_neg_even(int n, Digits digits);

/// zeta(s) for real s via the functional equation 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s).
/// Requires s < 0 so that 1 - s > 1.
HReal zeta_continued(const HReal& s, Bits bits);

struct DerivativeEstimate {
  HReal value;            // Richardson-extrapolated central difference
  double step = 0.0;      // finest step h
  HReal spread;           // |D(h) - D(2h)| after extrapolation, a heuristic error scale
};

/// zeta'(-2n) by numerical differentiation of zeta_continued (the cross-check route).
DerivativeEstimate zeta_deriv_numeric(int n, Digits digits);

/**
 * Reduction of zeta'(-2n) alongside the published closed forms
 * -zeta'(-2) = zeta(3)/(4 pi^2) and -zeta'(-4) = 24 zeta(5)/pi^4, plus the
 * numerical-differentiation verdict on which one holds.
 */
struct DerivativeReport {
  int n = 0;
  HReal closed_form;
  DerivativeEstimate numeric;
  std::optional<HReal> published;       // value implied by the published constant, if one exists
  std::string published_formula;
  bool numeric_matches_closed_form = false;
  bool numeric_matches_published = false;
  long agreement_digits = 20;
};

DerivativeReport derivative_report(int n, Digits digits);

}  // namespace oddzeta

#pragma once

/**
 * @file hreal.hpp
 * @brief Arbitrary-precision reals that carry a guaranteed absolute error bound.
 *
 * An HReal is a midpoint (an MPFR value at the working precision) and a radius
 * such that the true quantity lies in [mid - radius, mid + radius]. Every
 * operation widens the radius by the propagated input error plus its own
 * rounding error, so bounds are one-sided and conservative. Radii are kept in
 * a short MPFR float rounded upward, which lets them go far below 1e-308.
 */

#include "oddzeta/mpfr.hpp"
#include "oddzeta/rational.hpp"

#include <string>
#include <utility>

namespace oddzeta {

struct Bits {
  long value;
};

struct Digits {
  int value;
};

/// Working precision for D decimal digits: ceil(D log2 10) plus 32 guard bits.
Bits bits_for_digits(Digits digits);

class HReal {
 public:
  HReal();
  explicit HReal(Bits bits);

  static HReal from_int(long value, Bits bits);
  static HReal from_integer(const BigInt& value, Bits bits);
  static HReal from_rational(const BigRational& value, Bits bits);
  static HReal from_double(double value, Bits bits);
  // mid and radius given directly; radius is rounded up.
  static HReal from_parts(const Mpfr& mid, const Mpfr& radius);

  Bits precision() const { return Bits{mid_.precision()}; }
  const Mpfr& mid() const { return mid_; }
  const Mpfr& radius() const { return radius_; }

  double to_double() const;
  // Radius as a double; underflows to 0 for radii below ~1e-308.
  double radius_double() const;
  // log2 of the radius, -inf when exact.
  double radius_log2() const;

  bool is_exact() const;
  bool provably_positive() const;
  bool provably_negative() const;
  // |mid| > factor * radius.
  bool provably_nonzero(double factor = 1.0) const;
  // radius <= 10^(-digits).
  bool radius_below_decimal(long digits) const;

  // Exact rational endpoints of the enclosure.
  std::pair<BigRational, BigRational> enclosure() const;
  BigRational mid_rational() const;

  HReal rounded_to(Bits bits) const;
  HReal widened(const Mpfr& extra) const;
  HReal abs() const;
  HReal operator-() const;

  HReal& operator+=(const HReal& rhs);
  HReal& operator-=(const HReal& rhs);
  HReal& operator*=(const HReal& rhs);
  HReal& operator/=(const HReal& rhs);

  friend HReal operator+(HReal a, const HReal& b) { return a += b; }
  friend HReal operator-(HReal a, const HReal& b) { return a -= b; }
  friend HReal operator*(HReal a, const HReal& b) { return a *= b; }
  friend HReal operator/(HReal a, const HReal& b) { return a /= b; }

  HReal mul_int(long k) const;
  HReal div_int(long k) const;

 private:
  Mpfr mid_;
  Mpfr radius_;
};

/// True when the two enclosures intersect.
bool overlaps(const HReal& a, const HReal& b);

/// Upper bound on |a - b| over both enclosures.
Mpfr distance_upper(const HReal& a, const HReal& b);

/// Every point of a's enclosure is within 10^(-digits) of every point of b's.
bool agree_to_decimal(const HReal& a, const HReal& b, long digits);

/// |mid(a) - mid(b)| <= factor * (radius(a) + radius(b)).
bool agree_within_bounds(const HReal& a, const HReal& b, double factor = 1.0);

/// |mid| + radius, rounded up.
Mpfr magnitude_upper(const HReal& x);

/// log2 |mid|, -inf for zero. For choosing cutoffs only.
double log2_abs(const HReal& x);

/// 10^e in radius precision, rounded in direction @p rnd.
Mpfr decimal_power(long e, mpfr_rnd_t rnd);

HReal sqrt(const HReal& x);
HReal pow(const HReal& base, unsigned long exponent);

/// Radius accounts for argument error plus MPFR's rounding.
HReal hreal_exp(const HReal& x);
/// Throws std::domain_error unless x is provably positive.
HReal hreal_ln(const HReal& x);
/// Reduces x modulo 2 pi using pi() at elevated precision before evaluating.
HReal hreal_sin(const HReal& x);
HReal hreal_cos(const HReal& x);
/// Gamma for x >= 1 (used by the functional-equation cross-check).
HReal hreal_gamma(const HReal& x);

/// pi with radius <= 2^(2 - bits). Gauss-Legendre AGM, cached per precision.
HReal pi(Bits bits);
/// Gauss-Legendre AGM iteration with its truncation bound folded into the radius.
HReal pi_agm(Bits bits);
/// Machin's formula 16 atan(1/5) - 4 atan(1/239) with alternating-series tail bounds.
HReal pi_machin(Bits bits);

/**
 * Correctly rounded decimal with @p digits significant digits.
 *
 * Requires radius <= 10^(E - 1 - (digits + 2)) where 10^(E-1) <= |mid| < 10^E,
 * i.e. at most a thousandth of the last printed unit; for values in [1, 10)
 * this is exactly radius <= 10^-(digits+2). Throws InsufficientPrecision otherwise.
 * Values whose enclosure contains zero render as "0" if radius <= 10^-(digits+2).
 */
std::string render_decimal(const HReal& x, Digits digits);

/// Radius in scientific notation with three significant digits, rounded up.
std::string render_radius(const HReal& x);

}  // namespace oddzeta

#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals and the Bernoulli/Euler sequences behind every
 * closed-form zeta coefficient.
 *
 * BigRational is always stored in lowest terms with a positive denominator,
 * zero is 0/1. Arithmetic is exact; dividing by zero throws std::domain_error.
 */

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace oddzeta {

using BigInt = mpz_class;

class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(implicit)
  BigRational(const BigInt& value) : value_(value) {}  // NOLINT(implicit)
  BigRational(const BigInt& numerator, const BigInt& denominator);

  // Parses "p/q" or "p".
  static BigRational parse(const std::string& text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  BigInt floor() const;
  BigRational abs() const;
  BigRational reciprocal() const;

  // "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

 private:
  explicit BigRational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  mpq_class value_{0};
};

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigRational pow(const BigRational& base, unsigned long exponent);

/// Bernoulli number B_n with B_1 = -1/2. Memoized and thread-safe.
BigRational bernoulli(unsigned long n);

/// Euler (secant) number E_n: E_0 = 1, E_2 = -1, E_4 = 5, odd indices vanish.
BigInt euler_number(unsigned long n);

/// r with zeta(2n) = r * pi^(2n). Requires n >= 1.
BigRational even_zeta_coeff(unsigned long n);

/// Leading coefficient a_n of the Lerch series zeta(2n+1) = a_n pi^(2n+1) - 2 sum ...
/// Only defined when 2n+1 = 3 (mod 4); other n throw WrongResidueClass.
BigRational lerch_leading_coeff(unsigned long n);

/// r with L(2n+1, chi_4) = r * pi^(2n+1).
BigRational dirichlet_beta_coeff(unsigned long n);

}  // namespace oddzeta

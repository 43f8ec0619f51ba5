#include "oddzeta/hreal.hpp"

#include "oddzeta/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace oddzeta {

namespace {

constexpr mpfr_prec_t kRadiusBits = 32;

// Relative slack applied when a stored magnitude stands in for a true one.
constexpr long kSlackExponent = -28;

Mpfr upper_abs(mpfr_srcptr x) {
  Mpfr out(kRadiusBits);
  mpfr_abs(out.get(), x, MPFR_RNDU);
  Mpfr slack(kRadiusBits);
  mpfr_set_ui_2exp(slack.get(), 1, kSlackExponent, MPFR_RNDU);
  mpfr_add_ui(slack.get(), slack.get(), 1, MPFR_RNDU);
  mpfr_mul(out.get(), out.get(), slack.get(), MPFR_RNDU);
  return out;
}

Mpfr lower_abs(mpfr_srcptr x) {
  Mpfr out(kRadiusBits);
  mpfr_abs(out.get(), x, MPFR_RNDD);
  Mpfr slack(kRadiusBits);
  mpfr_set_ui_2exp(slack.get(), 1, kSlackExponent, MPFR_RNDD);
  mpfr_ui_sub(slack.get(), 1, slack.get(), MPFR_RNDD);
  mpfr_mul(out.get(), out.get(), slack.get(), MPFR_RNDD);
  return out;
}

// Adds half an ulp of the freshly rounded value when the operation was inexact
// (every MPFR call here rounds to nearest).
void add_rounding(Mpfr& radius, mpfr_srcptr value, int ternary) {
  if (ternary == 0 || mpfr_zero_p(value)) {
    return;
  }
  Mpfr ulp(kRadiusBits);
  mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(value) - mpfr_get_prec(value) - 1, MPFR_RNDU);
  mpfr_add(radius.get(), radius.get(), ulp.get(), MPFR_RNDU);
}

mpfr_prec_t max_prec(const HReal& a, const HReal& b) {
  return std::max(a.precision().value, b.precision().value);
}

BigRational exact_rational(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) {
    return BigRational();
  }
  BigInt mantissa;
  const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), x);
  BigInt scale = 1;
  if (e >= 0) {
    mpz_mul_2exp(mantissa.get_mpz_t(), mantissa.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return BigRational(mantissa);
  }
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return BigRational(mantissa, scale);
}

// x - 2 pi k with k = round(x / 2 pi), carried out at a precision wide enough
// that the subtraction of k copies of 2 pi loses nothing relative to x.
HReal reduce_two_pi(const HReal& x) {
  const mpfr_prec_t bits = x.precision().value;
  if (mpfr_zero_p(x.mid().get())) {
    return x;
  }
  const mpfr_exp_t magnitude = mpfr_get_exp(x.mid().get());
  if (magnitude <= 2) {
    return x;  // |x| < 4, no reduction needed
  }
  const HReal coarse_two_pi = pi(Bits{std::max<long>(64, magnitude + 32)}).mul_int(2);
  Mpfr quotient(std::max<long>(64, magnitude + 32));
  mpfr_div(quotient.get(), x.mid().get(), coarse_two_pi.mid().get(), MPFR_RNDN);
  BigInt k;
  mpfr_get_z(k.get_mpz_t(), quotient.get(), MPFR_RNDN);
  if (k == 0) {
    return x;
  }
  const Bits wide{bits + static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) + 16};
  const HReal two_pi = pi(wide).mul_int(2);
  HReal wide_x = x.rounded_to(wide);
  return wide_x - two_pi * HReal::from_integer(k, wide);
}

template <typename Fn>
HReal lipschitz_one(const HReal& x, Fn&& fn) {
  const HReal reduced = reduce_two_pi(x);
  Mpfr value(x.precision().value);
  const int ternary = fn(value.get(), reduced.mid().get());
  Mpfr radius = reduced.radius();
  add_rounding(radius, value.get(), ternary);
  return HReal::from_parts(value, radius);
}

class PiCache {
 public:
  HReal get(long bits) {
    {
      std::lock_guard lock(mutex_);
      auto it = values_.find(bits);
      if (it != values_.end()) {
        return it->second;
      }
    }
    HReal value = pi_agm(Bits{bits});
    std::lock_guard lock(mutex_);
    return values_.emplace(bits, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<long, HReal> values_;
};

// sum_{k>=0} (-1)^k / ((2k+1) m^(2k+1)); the alternating tail is bounded by the first omitted term.
HReal atan_inverse(long m, Bits bits) {
  const long m_squared = m * m;
  HReal power = HReal::from_int(1, bits).div_int(m);
  HReal sum(bits);
  const double log2_m = std::log2(static_cast<double>(m));
  for (long k = 0;; ++k) {
    const HReal term = power.div_int(2 * k + 1);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    power = power.div_int(m_squared);
    const double next_log2 = -(2.0 * k + 3.0) * log2_m - std::log2(2.0 * k + 3.0);
    if (next_log2 < -static_cast<double>(bits.value) - 8.0) {
      const HReal next = power.div_int(2 * k + 3);
      Mpfr tail = upper_abs(next.mid().get());
      mpfr_add(tail.get(), tail.get(), next.radius().get(), MPFR_RNDU);
      return sum.widened(tail);
    }
  }
}

}  // namespace

Bits bits_for_digits(Digits digits) {
  return Bits{static_cast<long>(std::ceil(digits.value * std::log2(10.0))) + 32};
}

HReal::HReal() : HReal(Bits{64}) {}

HReal::HReal(Bits bits) : mid_(bits.value), radius_(kRadiusBits) {}

HReal HReal::from_int(long value, Bits bits) {
  HReal out(bits);
  const int t = mpfr_set_si(out.mid_.get(), value, MPFR_RNDN);
  add_rounding(out.radius_, out.mid_.get(), t);
  return out;
}

HReal HReal::from_integer(const BigInt& value, Bits bits) {
  HReal out(bits);
  const int t = mpfr_set_z(out.mid_.get(), value.get_mpz_t(), MPFR_RNDN);
  add_rounding(out.radius_, out.mid_.get(), t);
  return out;
}

HReal HReal::from_rational(const BigRational& value, Bits bits) {
  HReal out(bits);
  const int t = mpfr_set_q(out.mid_.get(), value.raw().get_mpq_t(), MPFR_RNDN);
  add_rounding(out.radius_, out.mid_.get(), t);
  return out;
}

HReal HReal::from_double(double value, Bits bits) {
  HReal out(bits);
  const int t = mpfr_set_d(out.mid_.get(), value, MPFR_RNDN);
  add_rounding(out.radius_, out.mid_.get(), t);
  return out;
}

HReal HReal::from_parts(const Mpfr& mid, const Mpfr& radius) {
  HReal out(Bits{mid.precision()});
  mpfr_set(out.mid_.get(), mid.get(), MPFR_RNDN);
  mpfr_abs(out.radius_.get(), radius.get(), MPFR_RNDU);
  return out;
}

double HReal::to_double() const { return mpfr_get_d(mid_.get(), MPFR_RNDN); }

double HReal::radius_double() const { return mpfr_get_d(radius_.get(), MPFR_RNDU); }

double HReal::radius_log2() const {
  if (mpfr_zero_p(radius_.get())) {
    return -std::numeric_limits<double>::infinity();
  }
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, radius_.get(), MPFR_RNDU);
  return std::log2(m) + static_cast<double>(e);
}

bool HReal::is_exact() const { return mpfr_zero_p(radius_.get()) != 0; }

bool HReal::provably_positive() const {
  return mpfr_sgn(mid_.get()) > 0 && mpfr_cmp(lower_abs(mid_.get()).get(), radius_.get()) > 0;
}

bool HReal::provably_negative() const {
  return mpfr_sgn(mid_.get()) < 0 && mpfr_cmp(lower_abs(mid_.get()).get(), radius_.get()) > 0;
}

bool HReal::provably_nonzero(double factor) const {
  Mpfr scaled(kRadiusBits);
  mpfr_mul_d(scaled.get(), radius_.get(), factor, MPFR_RNDU);
  return mpfr_cmp(lower_abs(mid_.get()).get(), scaled.get()) > 0;
}

bool HReal::radius_below_decimal(long digits) const {
  return mpfr_cmp(radius_.get(), decimal_power(-digits, MPFR_RNDD).get()) <= 0;
}

std::pair<BigRational, BigRational> HReal::enclosure() const {
  const BigRational mid = exact_rational(mid_.get());
  const BigRational radius = exact_rational(radius_.get());
  return {mid - radius, mid + radius};
}

BigRational HReal::mid_rational() const { return exact_rational(mid_.get()); }

HReal HReal::rounded_to(Bits bits) const {
  HReal out(bits);
  const int t = mpfr_set(out.mid_.get(), mid_.get(), MPFR_RNDN);
  mpfr_set(out.radius_.get(), radius_.get(), MPFR_RNDU);
  add_rounding(out.radius_, out.mid_.get(), t);
  return out;
}

HReal HReal::widened(const Mpfr& extra) const {
  HReal out = *this;
  mpfr_add(out.radius_.get(), out.radius_.get(), extra.get(), MPFR_RNDU);
  return out;
}

HReal HReal::abs() const {
  HReal out = *this;
  mpfr_abs(out.mid_.get(), out.mid_.get(), MPFR_RNDN);
  return out;
}

HReal HReal::operator-() const {
  HReal out = *this;
  mpfr_neg(out.mid_.get(), out.mid_.get(), MPFR_RNDN);
  return out;
}

HReal& HReal::operator+=(const HReal& rhs) {
  Mpfr value(max_prec(*this, rhs));
  const int t = mpfr_add(value.get(), mid_.get(), rhs.mid_.get(), MPFR_RNDN);
  mid_ = std::move(value);
  mpfr_add(radius_.get(), radius_.get(), rhs.radius_.get(), MPFR_RNDU);
  add_rounding(radius_, mid_.get(), t);
  return *this;
}

HReal& HReal::operator-=(const HReal& rhs) {
  Mpfr value(max_prec(*this, rhs));
  const int t = mpfr_sub(value.get(), mid_.get(), rhs.mid_.get(), MPFR_RNDN);
  mid_ = std::move(value);
  mpfr_add(radius_.get(), radius_.get(), rhs.radius_.get(), MPFR_RNDU);
  add_rounding(radius_, mid_.get(), t);
  return *this;
}

HReal& HReal::operator*=(const HReal& rhs) {
  // |a'b' - ab| <= |a| rb + |b| ra + ra rb
  Mpfr radius = upper_abs(mid_.get());
  mpfr_mul(radius.get(), radius.get(), rhs.radius_.get(), MPFR_RNDU);
  Mpfr cross = upper_abs(rhs.mid_.get());
  mpfr_mul(cross.get(), cross.get(), radius_.get(), MPFR_RNDU);
  mpfr_add(radius.get(), radius.get(), cross.get(), MPFR_RNDU);
  mpfr_mul(cross.get(), radius_.get(), rhs.radius_.get(), MPFR_RNDU);
  mpfr_add(radius.get(), radius.get(), cross.get(), MPFR_RNDU);

  Mpfr value(max_prec(*this, rhs));
  const int t = mpfr_mul(value.get(), mid_.get(), rhs.mid_.get(), MPFR_RNDN);
  mid_ = std::move(value);
  radius_ = std::move(radius);
  add_rounding(radius_, mid_.get(), t);
  return *this;
}

HReal& HReal::operator/=(const HReal& rhs) {
  // |a'/b' - a/b| <= (ra |b| + |a| rb) / (|b| (|b| - rb))
  Mpfr b_low = lower_abs(rhs.mid_.get());
  Mpfr gap(kRadiusBits);
  mpfr_sub(gap.get(), b_low.get(), rhs.radius_.get(), MPFR_RNDD);
  if (mpfr_sgn(gap.get()) <= 0) {
    throw InsufficientPrecision("HReal division by a value not provably nonzero");
  }
  Mpfr numerator = upper_abs(rhs.mid_.get());
  mpfr_mul(numerator.get(), numerator.get(), radius_.get(), MPFR_RNDU);
  Mpfr cross = upper_abs(mid_.get());
  mpfr_mul(cross.get(), cross.get(), rhs.radius_.get(), MPFR_RNDU);
  mpfr_add(numerator.get(), numerator.get(), cross.get(), MPFR_RNDU);
  mpfr_mul(gap.get(), gap.get(), b_low.get(), MPFR_RNDD);
  mpfr_div(numerator.get(), numerator.get(), gap.get(), MPFR_RNDU);

  Mpfr value(max_prec(*this, rhs));
  const int t = mpfr_div(value.get(), mid_.get(), rhs.mid_.get(), MPFR_RNDN);
  mid_ = std::move(value);
  radius_ = std::move(numerator);
  add_rounding(radius_, mid_.get(), t);
  return *this;
}

HReal HReal::mul_int(long k) const {
  HReal out(precision());
  const int t = mpfr_mul_si(out.mid_.get(), mid_.get(), k, MPFR_RNDN);
  mpfr_mul_ui(out.radius_.get(), radius_.get(), static_cast<unsigned long>(k < 0 ? -k : k), MPFR_RNDU);
  add_rounding(out.radius_, out.mid_.get(), t);
  return out;
}

HReal HReal::div_int(long k) const {
  if (k == 0) {
    throw std::domain_error("HReal::div_int by zero");
  }
  HReal out(precision());
  const int t = mpfr_div_si(out.mid_.get(), mid_.get(), k, MPFR_RNDN);
  mpfr_div_ui(out.radius_.get(), radius_.get(), static_cast<unsigned long>(k < 0 ? -k : k), MPFR_RNDU);
  add_rounding(out.radius_, out.mid_.get(), t);
  return out;
}

Mpfr decimal_power(long e, mpfr_rnd_t rnd) {
  Mpfr out(kRadiusBits);
  Mpfr exponent(64);
  mpfr_set_si(exponent.get(), e, MPFR_RNDN);
  mpfr_exp10(out.get(), exponent.get(), rnd);
  return out;
}

Mpfr magnitude_upper(const HReal& x) {
  Mpfr out = upper_abs(x.mid().get());
  mpfr_add(out.get(), out.get(), x.radius().get(), MPFR_RNDU);
  return out;
}

double log2_abs(const HReal& x) {
  if (mpfr_zero_p(x.mid().get())) {
    return -std::numeric_limits<double>::infinity();
  }
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, x.mid().get(), MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

bool overlaps(const HReal& a, const HReal& b) { return agree_within_bounds(a, b, 1.0); }

Mpfr distance_upper(const HReal& a, const HReal& b) {
  Mpfr diff(max_prec(a, b));
  mpfr_sub(diff.get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  Mpfr out = upper_abs(diff.get());
  mpfr_add(out.get(), out.get(), a.radius().get(), MPFR_RNDU);
  mpfr_add(out.get(), out.get(), b.radius().get(), MPFR_RNDU);
  return out;
}

bool agree_to_decimal(const HReal& a, const HReal& b, long digits) {
  return mpfr_cmp(distance_upper(a, b).get(), decimal_power(-digits, MPFR_RNDD).get()) <= 0;
}

bool agree_within_bounds(const HReal& a, const HReal& b, double factor) {
  Mpfr diff(max_prec(a, b));
  mpfr_sub(diff.get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  Mpfr gap = lower_abs(diff.get());
  Mpfr allowed(kRadiusBits);
  mpfr_add(allowed.get(), a.radius().get(), b.radius().get(), MPFR_RNDU);
  mpfr_mul_d(allowed.get(), allowed.get(), factor, MPFR_RNDU);
  return mpfr_cmp(gap.get(), allowed.get()) <= 0;
}

HReal sqrt(const HReal& x) {
  if (mpfr_zero_p(x.mid().get()) && x.is_exact()) {
    return x;
  }
  if (!x.provably_positive()) {
    throw std::domain_error("sqrt of a value not provably positive");
  }
  // |sqrt(x') - sqrt(x)| <= r / sqrt(x)
  Mpfr root_low(kRadiusBits);
  mpfr_sqrt(root_low.get(), lower_abs(x.mid().get()).get(), MPFR_RNDD);
  Mpfr radius(kRadiusBits);
  mpfr_div(radius.get(), x.radius().get(), root_low.get(), MPFR_RNDU);
  Mpfr value(x.precision().value);
  const int t = mpfr_sqrt(value.get(), x.mid().get(), MPFR_RNDN);
  add_rounding(radius, value.get(), t);
  return HReal::from_parts(value, radius);
}

HReal pow(const HReal& base, unsigned long exponent) {
  HReal result = HReal::from_int(1, base.precision());
  HReal square = base;
  while (exponent > 0) {
    if (exponent & 1UL) {
      result *= square;
    }
    exponent >>= 1;
    if (exponent > 0) {
      square *= square;
    }
  }
  return result;
}

HReal hreal_exp(const HReal& x) {
  Mpfr value(x.precision().value);
  const int t = mpfr_exp(value.get(), x.mid().get(), MPFR_RNDN);
  // |e^(x+d) - e^x| <= e^x (e^r - 1)
  Mpfr radius(kRadiusBits);
  mpfr_expm1(radius.get(), x.radius().get(), MPFR_RNDU);
  mpfr_mul(radius.get(), radius.get(), upper_abs(value.get()).get(), MPFR_RNDU);
  add_rounding(radius, value.get(), t);
  return HReal::from_parts(value, radius);
}

HReal hreal_ln(const HReal& x) {
  if (!x.provably_positive()) {
    throw std::domain_error("ln of a value not provably positive");
  }
  Mpfr low = lower_abs(x.mid().get());
  mpfr_sub(low.get(), low.get(), x.radius().get(), MPFR_RNDD);
  Mpfr radius(kRadiusBits);
  mpfr_div(radius.get(), x.radius().get(), low.get(), MPFR_RNDU);
  Mpfr value(x.precision().value);
  const int t = mpfr_log(value.get(), x.mid().get(), MPFR_RNDN);
  add_rounding(radius, value.get(), t);
  return HReal::from_parts(value, radius);
}

HReal hreal_sin(const HReal& x) {
  return lipschitz_one(x, [](mpfr_ptr out, mpfr_srcptr in) { return mpfr_sin(out, in, MPFR_RNDN); });
}

HReal hreal_cos(const HReal& x) {
  return lipschitz_one(x, [](mpfr_ptr out, mpfr_srcptr in) { return mpfr_cos(out, in, MPFR_RNDN); });
}

HReal hreal_gamma(const HReal& x) {
  Mpfr low = lower_abs(x.mid().get());
  mpfr_sub(low.get(), low.get(), x.radius().get(), MPFR_RNDD);
  if (mpfr_sgn(x.mid().get()) <= 0 || mpfr_cmp_ui(low.get(), 1) < 0) {
    throw std::domain_error("hreal_gamma requires x >= 1");
  }
  Mpfr value(x.precision().value);
  const int t = mpfr_gamma(value.get(), x.mid().get(), MPFR_RNDN);
  // |Gamma'(y)| = Gamma(y) |psi(y)| and |psi(y)| <= ln(y) + 1 for y >= 1.
  Mpfr radius(kRadiusBits);
  if (!x.is_exact()) {
    Mpfr high = upper_abs(x.mid().get());
    mpfr_add(high.get(), high.get(), x.radius().get(), MPFR_RNDU);
    Mpfr slope(kRadiusBits);
    mpfr_log(slope.get(), high.get(), MPFR_RNDU);
    mpfr_add_ui(slope.get(), slope.get(), 1, MPFR_RNDU);
    mpfr_mul(radius.get(), slope.get(), x.radius().get(), MPFR_RNDU);
    if (mpfr_cmp_d(radius.get(), 0.5) > 0) {
      throw InsufficientPrecision("hreal_gamma: argument too uncertain");
    }
    // Gamma over the enclosure is at most Gamma(x) e^(slope r) <= 2 Gamma(x).
    mpfr_mul(radius.get(), radius.get(), upper_abs(value.get()).get(), MPFR_RNDU);
    mpfr_mul_ui(radius.get(), radius.get(), 2, MPFR_RNDU);
  }
  add_rounding(radius, value.get(), t);
  return HReal::from_parts(value, radius);
}

HReal pi(Bits bits) {
  static PiCache cache;
  return cache.get(bits.value);
}

HReal pi_agm(Bits bits) {
  const Bits work{bits.value + 32};
  HReal a = HReal::from_int(1, work);
  HReal b = sqrt(HReal::from_int(1, work).div_int(2));
  HReal t = HReal::from_int(1, work).div_int(4);
  long p = 1;
  // After k iterations, 0 < pi - pi_k <= pi^2 2^(k+4) e^(-pi 2^(k+1)) / agm(1, 1/sqrt 2)^2.
  // The bound is applied with k shifted down by one, which only weakens it.
  const double log2_pi = std::log2(3.1416);
  const double log2_agm = std::log2(0.8472);
  for (int k = 1; k < 64; ++k) {
    HReal next_a = (a + b).div_int(2);
    HReal next_b = sqrt(a * b);
    HReal delta = a - next_a;
    t -= (delta * delta).mul_int(p);
    p *= 2;
    a = std::move(next_a);
    b = std::move(next_b);
    const int shifted = k - 1;
    const double log2_truncation = 2.0 * log2_pi + (shifted + 4.0) -
                                   3.1415926 * std::ldexp(1.0, shifted + 1) / std::log(2.0) -
                                   2.0 * log2_agm;
    if (log2_truncation < -static_cast<double>(work.value)) {
      HReal sum = a + b;
      HReal estimate = (sum * sum) / t.mul_int(4);
      Mpfr truncation(kRadiusBits);
      mpfr_set_ui_2exp(truncation.get(), 1, static_cast<long>(std::ceil(log2_truncation)), MPFR_RNDU);
      return estimate.widened(truncation).rounded_to(bits);
    }
  }
  throw std::logic_error("pi_agm did not converge");
}

HReal pi_machin(Bits bits) {
  const Bits work{bits.value + 32};
  const HReal value = atan_inverse(5, work).mul_int(16) - atan_inverse(239, work).mul_int(4);
  return value.rounded_to(bits);
}

std::string render_decimal(const HReal& x, Digits digits) {
  if (digits.value < 1) {
    throw std::invalid_argument("render_decimal: digits must be positive");
  }
  const long d = digits.value;
  if (mpfr_zero_p(x.mid().get()) || !x.provably_nonzero()) {
    if (!x.radius_below_decimal(d + 2)) {
      throw InsufficientPrecision("render_decimal: value not resolved to " + std::to_string(d) +
                                  " digits");
    }
    return "0";
  }
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(d), x.mid().get(), MPFR_RNDN);
  std::string text(raw);
  mpfr_free_str(raw);

  const Mpfr threshold = decimal_power(static_cast<long>(exp10) - 1 - (d + 2), MPFR_RNDD);
  if (mpfr_cmp(x.radius().get(), threshold.get()) > 0) {
    throw InsufficientPrecision("render_decimal: radius too large for " + std::to_string(d) +
                                " significant digits");
  }

  std::string sign;
  if (!text.empty() && text.front() == '-') {
    sign = "-";
    text.erase(0, 1);
  }
  const long e = static_cast<long>(exp10);
  if (e <= 0 && e > -6) {
    return sign + "0." + std::string(static_cast<size_t>(-e), '0') + text;
  }
  if (e > 0 && e <= 30) {
    if (e >= d) {
      return sign + text + std::string(static_cast<size_t>(e - d), '0');
    }
    return sign + text.substr(0, static_cast<size_t>(e)) + "." + text.substr(static_cast<size_t>(e));
  }
  std::string mantissa = text.substr(0, 1);
  if (text.size() > 1) {
    mantissa += "." + text.substr(1);
  }
  return sign + mantissa + "e" + std::to_string(e - 1);
}

std::string render_radius(const HReal& x) {
  if (x.is_exact()) {
    return "0";
  }
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, 3, x.radius().get(), MPFR_RNDU);
  std::string text(raw);
  mpfr_free_str(raw);
  return text.substr(0, 1) + "." + text.substr(1) + "e" + std::to_string(static_cast<long>(exp10) - 1);
}

}  // namespace oddzeta

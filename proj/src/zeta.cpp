#include "oddzeta/zeta.hpp"

#include "oddzeta/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace oddzeta {

namespace {

constexpr int kEscalationAttempts = 8;

Bits escalate(Bits bits) { return Bits{bits.value + bits.value / 2}; }

template <typename Fn>
ZetaResult with_escalation(Digits digits, Fn&& compute) {
  const long target = target_decimal_exponent(digits);
  Bits bits = bits_for_digits(digits);
  for (int attempt = 0; attempt < kEscalationAttempts; ++attempt) {
    ZetaResult result = compute(bits);
    if (result.value.radius_below_decimal(target)) {
      result.precision = bits;
      result.target = digits;
      return result;
    }
    bits = escalate(bits);
  }
  throw InsufficientPrecision("precision escalation cap reached for " + std::to_string(digits.value) +
                              " digits");
}

HReal inverse_integer_power(unsigned long n, unsigned long s, Bits bits) {
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), n, s);
  return HReal::from_int(1, bits) / HReal::from_integer(power, bits);
}

// n^(-s) for real s: exp(-s ln n).
HReal inverse_real_power(unsigned long n, const HReal& s, Bits bits) {
  if (n == 1) {
    return HReal::from_int(1, bits);
  }
  const HReal log_n = hreal_ln(HReal::from_int(static_cast<long>(n), bits));
  return hreal_exp(-(s * log_n));
}

std::optional<unsigned long> as_small_integer(const HReal& s) {
  if (!s.is_exact() || !mpfr_integer_p(s.mid().get()) || mpfr_sgn(s.mid().get()) <= 0 ||
      !mpfr_fits_ulong_p(s.mid().get(), MPFR_RNDN)) {
    return std::nullopt;
  }
  return mpfr_get_ui(s.mid().get(), MPFR_RNDN);
}

HReal two_pi(Bits bits) { return pi(bits).mul_int(2); }

// Upper bound of e^(-2 pi m) at a modest precision.
Mpfr exp_neg_two_pi_upper(long m) {
  const Bits bits{64};
  return magnitude_upper(hreal_exp(-(two_pi(bits).mul_int(m))));
}

}  // namespace

std::string_view to_string(ZetaMethod method) {
  switch (method) {
    case ZetaMethod::direct:
      return "direct";
    case ZetaMethod::euler_even:
      return "euler_even";
    case ZetaMethod::lerch_4n3:
      return "lerch_4n3";
    case ZetaMethod::ramanujan_5:
      return "ramanujan_5";
    case ZetaMethod::pi_split:
      return "pi_split";
  }
  return "unknown";
}

long target_decimal_exponent(Digits digits) { return static_cast<long>(digits.value) + 2; }

long lerch_cutoff(Digits digits) {
  return static_cast<long>(std::ceil(digits.value * std::log(10.0) / (2.0 * std::numbers::pi))) + 4;
}

HReal zeta_euler_maclaurin(const HReal& s, Bits bits, long* terms, long* depth) {
  if (!(s - HReal::from_int(1, bits)).provably_positive()) {
    throw std::domain_error("zeta_euler_maclaurin requires s > 1");
  }
  const auto integer_s = as_small_integer(s);
  const auto inverse_power = [&](unsigned long n) {
    return integer_s ? inverse_integer_power(n, *integer_s, bits) : inverse_real_power(n, s, bits);
  };
  const double stop_log2 = -static_cast<double>(bits.value) - 4.0;

  long n_terms = static_cast<long>(std::ceil(0.15 * static_cast<double>(bits.value))) + 10;
  for (;;) {
    const unsigned long big_n = static_cast<unsigned long>(n_terms);
    HReal sum(bits);
    for (unsigned long n = 1; n < big_n; ++n) {
      sum += inverse_power(n);
    }
    const HReal n_real = HReal::from_int(n_terms, bits);
    const HReal n_pow = inverse_power(big_n);  // N^-s
    const HReal s_minus_one = s - HReal::from_int(1, bits);
    sum += (n_pow * n_real) / s_minus_one;
    sum += n_pow.div_int(2);

    // T_k = B_2k / (2k)! * s (s+1) ... (s+2k-2) * N^(-s-2k+1)
    HReal rising = s;                       // s (s+1) ... (s+2k-2), starting at k = 1
    HReal n_factor = n_pow / n_real;        // N^(-s-2k+1), starting at k = 1
    const HReal inv_n_squared = HReal::from_int(1, bits) / HReal::from_int(n_terms * n_terms, bits);
    double previous_log2 = std::numeric_limits<double>::infinity();
    bool diverging = false;
    for (unsigned long k = 1;; ++k) {
      const HReal coefficient =
          HReal::from_rational(bernoulli(2 * k) / BigRational(factorial(2 * k)), bits);
      const HReal term = coefficient * rising * n_factor;
      const double term_log2 = log2_abs(term);
      if (term_log2 < stop_log2) {
        // Remainder after k-1 corrections: at most twice the first omitted term.
        Mpfr remainder = magnitude_upper(term);
        mpfr_mul_ui(remainder.get(), remainder.get(), 2, MPFR_RNDU);
        if (terms != nullptr) {
          *terms = n_terms;
        }
        if (depth != nullptr) {
          *depth = static_cast<long>(k - 1);
        }
        return sum.widened(remainder);
      }
      if (term_log2 >= previous_log2) {
        diverging = true;
        break;
      }
      previous_log2 = term_log2;
      sum += term;
      const long j = static_cast<long>(2 * k);
      rising *= (s + HReal::from_int(j - 1, bits)) * (s + HReal::from_int(j, bits));
      n_factor *= inv_n_squared;
    }
    if (diverging) {
      n_terms *= 2;
    }
  }
}

ZetaResult zeta_direct(int s, Digits digits) {
  if (s < 2) {
    throw std::invalid_argument("zeta_direct requires s >= 2");
  }
  return with_escalation(digits, [&](Bits bits) {
    ZetaResult result;
    result.s = s;
    result.method = ZetaMethod::direct;
    result.value = zeta_euler_maclaurin(HReal::from_int(s, bits), bits, &result.truncation,
                                        &result.correction_terms);
    return result;
  });
}

ZetaResult zeta_even_exact(int n, Digits digits) {
  if (n < 1) {
    throw std::invalid_argument("zeta_even_exact requires n >= 1");
  }
  const BigRational coefficient = even_zeta_coeff(static_cast<unsigned long>(n));
  return with_escalation(digits, [&](Bits bits) {
    ZetaResult result;
    result.s = 2 * n;
    result.method = ZetaMethod::euler_even;
    result.value = HReal::from_rational(coefficient, bits) * pow(pi(bits), 2UL * static_cast<unsigned long>(n));
    return result;
  });
}

HReal lerch_tail(int s, TailSign sign, long cutoff, Bits bits) {
  if (s < 3 || s % 2 == 0) {
    throw std::invalid_argument("lerch_tail requires odd s >= 3");
  }
  if (cutoff < 0) {
    throw std::invalid_argument("lerch_tail cutoff must be non-negative");
  }
  const HReal one = HReal::from_int(1, bits);
  const HReal step = two_pi(bits);
  HReal sum(bits);
  for (long m = 1; m <= cutoff; ++m) {
    HReal denominator = hreal_exp(step.mul_int(m));
    if (sign == TailSign::minus) {
      denominator -= one;
    } else {
      denominator += one;
    }
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(s));
    denominator *= HReal::from_integer(power, bits);
    sum += one / denominator;
  }
  // sum_{m>M} 1/(e^(2 pi m) - 1) <= e^(-2 pi (M+1)) / (1 - e^(-2 pi))^2 < 2 e^(-2 pi (M+1))
  Mpfr tail = exp_neg_two_pi_upper(cutoff + 1);
  mpfr_mul_ui(tail.get(), tail.get(), 2, MPFR_RNDU);
  return sum.widened(tail);
}

ZetaResult zeta_odd_lerch(int s, Digits digits) {
  if (s < 3 || s % 4 != 3) {
    throw WrongResidueClass("zeta_odd_lerch requires s = 3 (mod 4), got " + std::to_string(s));
  }
  const BigRational coefficient = lerch_leading_coeff(static_cast<unsigned long>((s - 1) / 2));
  const long cutoff = lerch_cutoff(digits);
  return with_escalation(digits, [&](Bits bits) {
    ZetaResult result;
    result.s = s;
    result.method = ZetaMethod::lerch_4n3;
    result.truncation = cutoff;
    result.value = HReal::from_rational(coefficient, bits) * pow(pi(bits), static_cast<unsigned long>(s)) -
                   lerch_tail(s, TailSign::minus, cutoff, bits).mul_int(2);
    return result;
  });
}

namespace {

HReal ramanujan5_remainder(long cutoff, Bits bits) {
  const HReal minus = lerch_tail(5, TailSign::minus, cutoff, bits);
  const HReal plus = lerch_tail(5, TailSign::plus, cutoff, bits);
  return -(minus.mul_int(72) + plus.mul_int(2)).div_int(35);
}

}  // namespace

ZetaResult zeta5_ramanujan(Digits digits) {
  const long cutoff = lerch_cutoff(digits);
  return with_escalation(digits, [&](Bits bits) {
    ZetaResult result;
    result.s = 5;
    result.method = ZetaMethod::ramanujan_5;
    result.truncation = cutoff;
    result.value = pow(pi(bits), 5).div_int(294) + ramanujan5_remainder(cutoff, bits);
    return result;
  });
}

PiSplit pi_split(int s, Digits digits, const std::optional<BigRational>& supplied_a) {
  if (s < 3 || s % 2 == 0) {
    throw std::invalid_argument("pi_split requires odd s >= 3");
  }
  PiSplit split;
  split.s = s;
  const long cutoff = lerch_cutoff(digits);
  const long target = target_decimal_exponent(digits);
  Bits bits = bits_for_digits(digits);
  for (int attempt = 0; attempt < kEscalationAttempts; ++attempt) {
    if (s % 4 == 3) {
      split.a = lerch_leading_coeff(static_cast<unsigned long>((s - 1) / 2));
      split.b = -lerch_tail(s, TailSign::minus, cutoff, bits).mul_int(2);
      split.source = ZetaMethod::lerch_4n3;
      split.truncation = cutoff;
    } else if (s == 5) {
      split.a = BigRational(1, 294);
      split.b = ramanujan5_remainder(cutoff, bits);
      split.source = ZetaMethod::ramanujan_5;
      split.truncation = cutoff;
    } else {
      const ZetaResult zeta = zeta_direct(s, Digits{digits.value + 2});
      split.source = ZetaMethod::direct;
      split.truncation = zeta.truncation;
      if (supplied_a) {
        split.a = *supplied_a;
        split.b = zeta.value - HReal::from_rational(*supplied_a, bits) *
                                   pow(pi(bits), static_cast<unsigned long>(s));
      } else {
        split.a = BigRational();
        split.b = zeta.value;
        split.degenerate = true;
      }
    }
    if (split.b.radius_below_decimal(target)) {
      return split;
    }
    bits = escalate(bits);
  }
  throw InsufficientPrecision("pi_split: precision escalation cap reached");
}

long divisor_series_cutoff(Bits bits) {
  return static_cast<long>(std::ceil(static_cast<double>(bits.value) * std::log(2.0) /
                                     (2.0 * std::numbers::pi))) + 4;
}

HReal sigma_divisor_series(int s, Bits bits, std::optional<long> cutoff) {
  if (s < 2) {
    throw std::invalid_argument("sigma_divisor_series requires s >= 2");
  }
  const long m_max = cutoff.value_or(divisor_series_cutoff(bits));
  if (m_max < 0) {
    throw std::invalid_argument("sigma_divisor_series cutoff must be non-negative");
  }
  const HReal step = two_pi(bits);
  HReal sum(bits);
  for (long n = 1; n <= m_max; ++n) {
    // sigma_{-s}(n) = sigma_s(n) / n^s, exactly.
    BigInt divisor_power_sum = 0;
    for (long d = 1; d * d <= n; ++d) {
      if (n % d != 0) {
        continue;
      }
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(s));
      divisor_power_sum += p;
      const long other = n / d;
      if (other != d) {
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(other), static_cast<unsigned long>(s));
        divisor_power_sum += p;
      }
    }
    BigInt n_power;
    mpz_ui_pow_ui(n_power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(s));
    const HReal sigma = HReal::from_rational(BigRational(divisor_power_sum, n_power), bits);
    sum += sigma * hreal_exp(-(step.mul_int(n)));
  }
  // sigma_{-s}(n) <= zeta(s) <= 1 + 1/(s-1)
  const Bits coarse{64};
  const HReal zeta_bound = HReal::from_int(1, coarse) + HReal::from_int(1, coarse).div_int(s - 1);
  const HReal ratio = HReal::from_int(1, coarse) - hreal_exp(-two_pi(coarse));
  const HReal tail = zeta_bound * hreal_exp(-(two_pi(coarse).mul_int(m_max + 1))) / ratio;
  return sum.widened(magnitude_upper(tail));
}

HReal zeta_deriv_neg_even(int n, Digits digits) {
  if (n < 1) {
    throw std::invalid_argument("zeta_deriv_neg_even requires n >= 1");
  }
  const long target = target_decimal_exponent(digits);
  const auto two_n = static_cast<unsigned long>(2 * n);
  for (int extra = 4; extra < 4 + 16 * kEscalationAttempts; extra += 16) {
    const Digits inner{digits.value + extra};
    const Bits bits = bits_for_digits(inner);
    const HReal zeta = zeta_direct(2 * n + 1, inner).value;
    HReal value = HReal::from_integer(factorial(two_n), bits) * zeta /
                  pow(two_pi(bits), two_n).mul_int(2);
    if (n % 2 == 1) {
      value = -value;
    }
    if (value.radius_below_decimal(target)) {
      return value;
    }
  }
  throw InsufficientPrecision("zeta_deriv_neg_even: precision escalation cap reached");
}

HReal zeta_continued(const HReal& s, Bits bits) {
  if (!s.provably_negative()) {
    throw std::domain_error("zeta_continued requires s < 0");
  }
  const HReal one = HReal::from_int(1, bits);
  const HReal pi_value = pi(bits);
  const HReal power_of_two = hreal_exp(s * hreal_ln(HReal::from_int(2, bits)));
  const HReal power_of_pi = hreal_exp((s - one) * hreal_ln(pi_value));
  const HReal sine = hreal_sin((pi_value * s).div_int(2));
  const HReal reflected = one - s;
  return power_of_two * power_of_pi * sine * hreal_gamma(reflected) *
         zeta_euler_maclaurin(reflected, bits);
}

DerivativeEstimate zeta_deriv_numeric(int n, Digits digits) {
  if (n < 1) {
    throw std::invalid_argument("zeta_deriv_numeric requires n >= 1");
  }
  // Richardson-extrapolated central differences have error O(h^4); choose h = 2^-k
  // with h^4 below the target, and carry enough digits to absorb the 1/h cancellation.
  const long step_exponent =
      static_cast<long>(std::ceil((digits.value + 10) * std::log2(10.0) / 4.0));
  const Bits bits = bits_for_digits(Digits{digits.value + 20 + static_cast<int>(step_exponent * 0.31) + 10});
  const HReal centre = HReal::from_int(-2 * n, bits);

  const auto central_difference = [&](long exponent) {
    Mpfr h(bits.value);
    mpfr_set_ui_2exp(h.get(), 1, -exponent, MPFR_RNDN);
    const HReal step = HReal::from_parts(h, Mpfr(32));
    const HReal forward = zeta_continued(centre + step, bits);
    const HReal backward = zeta_continued(centre - step, bits);
    return (forward - backward) / step.mul_int(2);
  };
  const auto richardson = [&](long exponent) {
    const HReal coarse = central_difference(exponent);
    const HReal fine = central_difference(exponent + 1);
    return (fine.mul_int(4) - coarse).div_int(3);
  };

  DerivativeEstimate estimate;
  estimate.value = richardson(step_exponent);
  estimate.step = std::ldexp(1.0, -static_cast<int>(step_exponent + 1));
  estimate.spread = (estimate.value - richardson(step_exponent - 1)).abs();
  return estimate;
}

DerivativeReport derivative_report(int n, Digits digits) {
  DerivativeReport report;
  report.n = n;
  report.closed_form = zeta_deriv_neg_even(n, digits);
  const Digits oracle_digits{std::max(digits.value, static_cast<int>(report.agreement_digits) + 10)};
  report.numeric = zeta_deriv_numeric(n, oracle_digits);

  const Bits bits = bits_for_digits(Digits{digits.value + 4});
  if (n == 1) {
    // -zeta'(-2) = zeta(3) / (4 pi^2)
    const HReal zeta3 = zeta_direct(3, Digits{digits.value + 4}).value;
    report.published = -(zeta3 / pow(pi(bits), 2).mul_int(4));
    report.published_formula = "-zeta'(-2) = zeta(3)/(4 pi^2)";
  } else if (n == 2) {
    // -zeta'(-4) = 24 zeta(5) / pi^4
    const HReal zeta5 = zeta_direct(5, Digits{digits.value + 4}).value;
    report.published = -(zeta5.mul_int(24) / pow(pi(bits), 4));
    report.published_formula = "-zeta'(-4) = 24 zeta(5)/pi^4";
  }

  const HReal numeric_enclosure = report.numeric.value.widened(magnitude_upper(report.numeric.spread));
  report.numeric_matches_closed_form =
      agree_to_decimal(report.closed_form, numeric_enclosure, report.agreement_digits);
  if (report.published) {
    report.numeric_matches_published =
        agree_to_decimal(*report.published, numeric_enclosure, report.agreement_digits);
  }
  return report;
}

}  // namespace oddzeta

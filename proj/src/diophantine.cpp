#include "oddzeta/diophantine.hpp"

#include "oddzeta/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace oddzeta {

namespace {

// num/den with den >= 0; den == 0 stands for +infinity.
struct Fraction {
  BigInt num;
  BigInt den;
};

Fraction to_fraction(const BigRational& r) { return {r.numerator(), r.denominator()}; }

BigInt floor_of(const Fraction& f) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), f.num.get_mpz_t(), f.den.get_mpz_t());
  return q;
}

std::vector<Convergent> convergents_of(const std::vector<BigInt>& quotients) {
  std::vector<Convergent> out;
  out.reserve(quotients.size());
  BigInt p_prev = 1;
  BigInt q_prev = 0;
  BigInt p_prev2 = 0;
  BigInt q_prev2 = 1;
  for (const BigInt& a : quotients) {
    BigInt p = a * p_prev + p_prev2;
    BigInt q = a * q_prev + q_prev2;
    p_prev2 = std::move(p_prev);
    q_prev2 = std::move(q_prev);
    p_prev = p;
    q_prev = q;
    out.push_back({std::move(p), std::move(q)});
  }
  return out;
}

// |alpha q - p| over alpha in [lo, hi]; q > 0 so alpha q - p is increasing.
RationalInterval residual_interval(const RationalInterval& alpha, const BigInt& q, const BigInt& p) {
  const BigRational at_lo = alpha.lo * BigRational(q) - BigRational(p);
  const BigRational at_hi = alpha.hi * BigRational(q) - BigRational(p);
  if (at_lo.sign() >= 0) {
    return {at_lo, at_hi};
  }
  if (at_hi.sign() <= 0) {
    return {-at_hi, -at_lo};
  }
  return {BigRational(), std::max(-at_lo, at_hi)};
}

double estimate(const RationalInterval& r) {
  const BigRational mid = (r.lo + r.hi) / BigRational(2);
  return mpq_get_d(mid.raw().get_mpq_t());
}

RationalInterval enclosure_of(const HReal& alpha) {
  auto [lo, hi] = alpha.enclosure();
  return {std::move(lo), std::move(hi)};
}

}  // namespace

ContinuedFraction cf_expand(const RationalInterval& interval, std::size_t max_terms, std::string label) {
  if (interval.hi < interval.lo) {
    throw std::invalid_argument("cf_expand: empty interval");
  }
  ContinuedFraction cf;
  cf.label = std::move(label);
  Fraction lo = to_fraction(interval.lo);
  Fraction hi = to_fraction(interval.hi);

  // Each step maps x -> 1 / (x - a) on both endpoints as integer pairs, which
  // reverses their order.
  while (cf.quotients.size() < max_terms) {
    if (hi.den == 0) {
      break;
    }
    const BigInt a = floor_of(lo);
    if (floor_of(hi) != a) {
      break;
    }
    cf.quotients.push_back(a);
    BigInt lo_rest = lo.num - a * lo.den;
    BigInt hi_rest = hi.num - a * hi.den;
    if (lo_rest == 0 && hi_rest == 0) {
      cf.terminated = true;
      break;
    }
    Fraction next_lo{std::move(hi.den), std::move(hi_rest)};
    Fraction next_hi{std::move(lo.den), std::move(lo_rest)};
    lo = std::move(next_lo);
    hi = std::move(next_hi);
    if (lo.den == 0) {
      break;  // lower endpoint hit an integer exactly; nothing further is determined
    }
  }
  if (cf.quotients.empty() && max_terms > 0) {
    throw InsufficientPrecision("cf_expand: enclosure does not determine a_0");
  }
  cf.certified_terms = cf.quotients.size();
  cf.convergents = convergents_of(cf.quotients);
  return cf;
}

ContinuedFraction cf_expand(const HReal& alpha, std::size_t max_terms, std::string label) {
  return cf_expand(enclosure_of(alpha), max_terms, std::move(label));
}

ContinuedFraction cf_expand(const BigRational& value, std::size_t max_terms, std::string label) {
  return cf_expand(RationalInterval{value, value}, max_terms, std::move(label));
}

std::vector<InequalityCheck> check_two_sided_inequality(const ContinuedFraction& cf, const HReal& alpha) {
  const RationalInterval range = enclosure_of(alpha);
  std::vector<InequalityCheck> checks;
  for (std::size_t n = 0; n + 1 < cf.certified_terms; ++n) {
    InequalityCheck check;
    check.n = n;
    check.p = cf.convergents[n].p;
    check.q = cf.convergents[n].q;
    check.q_next = cf.convergents[n + 1].q;
    check.residual = residual_interval(range, check.q, check.p);
    check.residual_estimate = estimate(check.residual);

    const BigRational lower_bound = BigRational(1) / BigRational(BigInt(2 * check.q_next));
    const BigRational upper_bound = BigRational(1) / BigRational(check.q);
    if (check.residual.lo >= lower_bound) {
      check.lower = CheckStatus::pass;
    } else if (check.residual.hi < lower_bound) {
      check.lower = CheckStatus::fail;
    } else {
      throw InsufficientPrecision("check_two_sided_inequality: lower bound undecided at n = " +
                                  std::to_string(n));
    }
    if (check.residual.hi <= upper_bound) {
      check.upper = CheckStatus::pass;
    } else if (check.residual.lo > upper_bound) {
      check.upper = CheckStatus::fail;
    } else {
      throw InsufficientPrecision("check_two_sided_inequality: upper bound undecided at n = " +
                                  std::to_string(n));
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

BestApproximationReport best_approx_bruteforce(const HReal& alpha, std::size_t n) {
  return best_approx_bruteforce(alpha, cf_expand(alpha, n + 1), n);
}

BestApproximationReport best_approx_bruteforce(const HReal& alpha, const ContinuedFraction& cf, std::size_t n) {
  if (n >= cf.certified_terms) {
    throw InsufficientPrecision("best_approx_bruteforce: convergent " + std::to_string(n) +
                                " is not certified");
  }
  const Convergent& target = cf.convergents[n];
  if (target.q > 1000000) {
    throw std::invalid_argument("best_approx_bruteforce: q_n exceeds 10^6");
  }
  const RationalInterval range = enclosure_of(alpha);
  const RationalInterval best = residual_interval(range, target.q, target.p);
  const BigRational mid = alpha.mid_rational();
  const double inverse_pi = 1.0 / 3.14159265358979323846;

  BestApproximationReport report;
  report.n = n;
  report.p = target.p;
  report.q = target.q;
  const long q_n = target.q.get_si();
  for (long k = 1; k <= q_n; ++k) {
    // m = nearest integer to alpha k
    const BigRational scaled = mid * BigRational(k);
    BigInt m = (scaled + BigRational(1, 2)).floor();
    ++report.scanned;
    const RationalInterval residual = residual_interval(range, BigInt(k), m);
    if (estimate(residual) < inverse_pi) {
      ++report.scaled_bound_holds;
    }
    if (k == q_n && m == target.p) {
      continue;
    }
    if (residual.lo > best.hi) {
      continue;
    }
    if (residual.hi < best.lo || (k == q_n && residual.hi <= best.lo)) {
      report.optimal = false;
      report.witness_k = k;
      break;
    }
    throw InsufficientPrecision("best_approx_bruteforce: k = " + std::to_string(k) +
                                " is indistinguishable from the convergent");
  }
  return report;
}

BigRational simplest_rational_between(const BigRational& lo, const BigRational& hi) {
  if (hi < lo) {
    throw std::invalid_argument("simplest_rational_between: empty interval");
  }
  std::vector<BigInt> quotients;
  Fraction x = to_fraction(lo);
  Fraction y = to_fraction(hi);
  for (;;) {
    const BigInt fl = floor_of(x);
    if (fl * x.den == x.num) {
      quotients.push_back(fl);
      break;
    }
    // y == +inf, or fl + 1 <= y
    if (y.den == 0 || (fl + 1) * y.den <= y.num) {
      quotients.push_back(fl + 1);
      break;
    }
    quotients.push_back(fl);
    Fraction next_x{y.den, y.num - fl * y.den};
    Fraction next_y{x.den, x.num - fl * x.den};
    x = std::move(next_x);
    y = std::move(next_y);
  }
  const Convergent last = convergents_of(quotients).back();
  return BigRational(last.p, last.q);
}

ExclusionReport rational_exclusion(const HReal& alpha, const BigInt& denominator_bound) {
  if (denominator_bound < 1) {
    throw std::invalid_argument("rational_exclusion: denominator bound must be positive");
  }
  const RationalInterval range = enclosure_of(alpha);
  const BigRational epsilon = (range.hi - range.lo) / BigRational(2);
  const BigRational bound(denominator_bound);
  if (!(epsilon * bound * bound < BigRational(1, 4))) {
    throw std::invalid_argument("rational_exclusion: requires epsilon * B^2 < 1/4");
  }

  ExclusionReport report;
  report.denominator_bound = denominator_bound;
  report.epsilon = render_radius(alpha);
  report.simplest = simplest_rational_between(range.lo, range.hi);
  report.rational_found = report.simplest.denominator() <= denominator_bound;

  const ContinuedFraction cf = cf_expand(range, static_cast<std::size_t>(-1));
  for (const Convergent& c : cf.convergents) {
    if (c.q > denominator_bound) {
      break;
    }
    ++report.convergents_examined;
  }

  std::string bound_text = denominator_bound.get_str();
  if (bound_text.size() > 4 && bound_text.find_first_not_of('0', 1) == std::string::npos &&
      bound_text.front() == '1') {
    bound_text = "10^" + std::to_string(bound_text.size() - 1);
  }
  if (report.rational_found) {
    report.statement = "rational " + report.simplest.to_string() + " with denominator <= " + bound_text +
                       " lies within epsilon = " + report.epsilon + " of the value";
  } else {
    report.statement = "no rational with denominator <= " + bound_text + " lies within epsilon = " +
                       report.epsilon +
                       " (numerical exclusion at precision epsilon, not a proof of irrationality)";
  }
  return report;
}

}  // namespace oddzeta

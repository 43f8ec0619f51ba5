#include <doctest.h>

#include "oddzeta/diophantine.hpp"
#include "oddzeta/errors.hpp"
#include "oddzeta/expr.hpp"

#include <random>

using namespace oddzeta;

namespace {

std::vector<long> as_longs(const ContinuedFraction& cf, std::size_t count) {
  std::vector<long> out;
  for (std::size_t i = 0; i < count && i < cf.quotients.size(); ++i) {
    out.push_back(cf.quotients[i].get_si());
  }
  return out;
}

void check_recurrence(const ContinuedFraction& cf) {
  for (std::size_t n = 0; n < cf.convergents.size(); ++n) {
    const Convergent& c = cf.convergents[n];
    BigInt g;
    mpz_gcd(g.get_mpz_t(), c.p.get_mpz_t(), c.q.get_mpz_t());
    CHECK(g == 1);
    if (n >= 1) {
      const Convergent& prev = cf.convergents[n - 1];
      // p_n q_{n-1} - p_{n-1} q_n = (-1)^(n+1)
      const BigInt det = c.p * prev.q - prev.p * c.q;
      CHECK(det == ((n % 2 == 1) ? 1 : -1));
    }
    if (n >= 2) {
      CHECK(c.q == cf.quotients[n] * cf.convergents[n - 1].q + cf.convergents[n - 2].q);
    }
  }
}

}  // namespace

TEST_CASE("exact rationals round-trip") {
  const ContinuedFraction cf = cf_expand(BigRational(BigInt(355), BigInt(113)), 50);
  CHECK(cf.terminated);
  CHECK(as_longs(cf, 10) == std::vector<long>{3, 7, 16});
  CHECK(BigRational(cf.convergents.back().p, cf.convergents.back().q) == BigRational(BigInt(355), BigInt(113)));

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 200; ++i) {
    const BigRational x(BigInt(dist(rng)), BigInt(den(rng)));
    const ContinuedFraction e = cf_expand(x, 1000);
    CHECK(e.terminated);
    CHECK(BigRational(e.convergents.back().p, e.convergents.back().q) == x);
    check_recurrence(e);
  }
}

TEST_CASE("pi quotients and certification") {
  const HReal value = evaluate_expr("pi", Bits{160});
  const ContinuedFraction cf = cf_expand(value, 1000, "pi");
  CHECK(as_longs(cf, 13) == std::vector<long>{3, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14});
  CHECK(cf.certified_terms < 1000);
  check_recurrence(cf);
  CHECK_THROWS_AS(cf_expand(HReal::from_int(3, Bits{64}).widened(decimal_power(-3, MPFR_RNDU)), 5),
                  InsufficientPrecision);
}

TEST_CASE("certified prefixes are stable under precision doubling") {
  for (const char* expr : {"pi", "zeta3", "pi/zeta3", "zeta3/pi^3", "pi^3/zeta5"}) {
    for (long bits : {100L, 200L, 400L}) {
      const ContinuedFraction lo = cf_expand(evaluate_expr(expr, Bits{bits}), 1000);
      const ContinuedFraction hi = cf_expand(evaluate_expr(expr, Bits{2 * bits}), 1000);
      REQUIRE(hi.certified_terms >= lo.certified_terms);
      for (std::size_t i = 0; i < lo.certified_terms; ++i) {
        CHECK(lo.quotients[i] == hi.quotients[i]);
      }
    }
  }
}

TEST_CASE("two-sided inequality at every certified index") {
  for (const char* expr : {"pi", "pi/zeta3", "zeta3/pi^3", "pi^3/zeta5", "pi^5/zeta5"}) {
    const HReal value = evaluate_expr(expr, Bits{400});
    const ContinuedFraction cf = cf_expand(value, 1000);
    const auto checks = check_two_sided_inequality(cf, value);
    CHECK(checks.size() + 1 == cf.certified_terms);
    for (const InequalityCheck& c : checks) {
      CHECK_MESSAGE(c.passed(), expr << " n = " << c.n);
    }
  }
}

TEST_CASE("best approximation brute force") {
  for (const char* expr : {"pi", "pi/zeta3", "pi^3/zeta5"}) {
    const HReal value = evaluate_expr(expr, Bits{200});
    const ContinuedFraction cf = cf_expand(value, 1000);
    for (std::size_t n = 1; n < cf.certified_terms && cf.convergents[n].q <= 10000; ++n) {
      const BestApproximationReport report = best_approx_bruteforce(value, cf, n);
      CHECK_MESSAGE(report.optimal, expr << " n = " << n);
      CHECK(report.scanned == cf.convergents[n].q.get_ui());
    }
  }
  // 0.7 has a_0 = 0 but 1/1 is closer than 0/1.
  const HReal seven_tenths = HReal::from_rational(BigRational(BigInt(7), BigInt(10)), Bits{64});
  const BestApproximationReport zero = best_approx_bruteforce(seven_tenths, 0);
  CHECK_FALSE(zero.optimal);
}

TEST_CASE("simplest rational in an interval") {
  auto q = [](long p, long d) { return BigRational(BigInt(p), BigInt(d)); };
  CHECK(simplest_rational_between(q(3, 10), q(4, 10)) == q(1, 3));
  CHECK(simplest_rational_between(q(31415, 10000), q(31416, 10000)) == q(333, 106));
  CHECK(simplest_rational_between(q(2, 1), q(5, 2)) == q(2, 1));
  CHECK(simplest_rational_between(q(-7, 3), q(-7, 3)) == q(-7, 3));
}

TEST_CASE("rational exclusion is labeled as numerical") {
  const HReal value = evaluate_expr("zeta3/pi^3", Bits{300});
  BigInt bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 10, 20);
  const ExclusionReport report = rational_exclusion(value, bound);
  CHECK_FALSE(report.rational_found);
  CHECK(report.statement.find("not a proof of irrationality") != std::string::npos);
  CHECK(report.statement.find("10^20") != std::string::npos);

  const HReal third = HReal::from_rational(BigRational(BigInt(1), BigInt(3)), Bits{200});
  CHECK(rational_exclusion(third, BigInt(10)).rational_found);

  mpz_ui_pow_ui(bound.get_mpz_t(), 10, 60);
  CHECK_THROWS_AS(rational_exclusion(value, bound), std::invalid_argument);
}

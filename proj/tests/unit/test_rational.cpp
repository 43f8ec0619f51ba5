#include <doctest.h>

#include "oddzeta/errors.hpp"
#include "oddzeta/hreal.hpp"
#include "oddzeta/rational.hpp"
#include "oddzeta/zeta.hpp"

#include <random>
#include <vector>

using namespace oddzeta;

namespace {

// Akiyama-Tanigawa; yields B_1 = +1/2, so only n != 1 is compared.
std::vector<BigRational> akiyama_tanigawa(unsigned long count) {
  std::vector<BigRational> out;
  std::vector<BigRational> row;
  for (unsigned long m = 0; m < count; ++m) {
    row.push_back(BigRational(BigInt(1), BigInt(m + 1)));
    for (unsigned long j = m; j >= 1; --j) {
      row[j - 1] = BigRational(static_cast<long>(j)) * (row[j - 1] - row[j]);
    }
    out.push_back(row[0]);
  }
  return out;
}

BigRational r(long p, long q) { return BigRational(BigInt(p), BigInt(q)); }

}  // namespace

TEST_CASE("BigRational normalizes and rejects zero denominators") {
  const BigRational x(BigInt(6), BigInt(-4));
  CHECK(x.numerator() == -3);
  CHECK(x.denominator() == 2);
  CHECK(x.to_string() == "-3/2");
  CHECK(BigRational(BigInt(8), BigInt(4)).to_string() == "2");
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(BigRational(1) / BigRational(), std::domain_error);
  CHECK(BigRational::parse("10/-4") == r(-5, 2));
  CHECK_THROWS_AS(BigRational::parse("abc"), std::invalid_argument);
  CHECK(r(7, 2).floor() == 3);
  CHECK(r(-7, 2).floor() == -4);
}

TEST_CASE("Bernoulli numbers match Akiyama-Tanigawa") {
  const auto oracle = akiyama_tanigawa(61);
  for (unsigned long n = 0; n < oracle.size(); ++n) {
    if (n == 1) {
      CHECK(bernoulli(1) == r(-1, 2));
      continue;
    }
    CHECK_MESSAGE(bernoulli(n) == oracle[n], "n = " << n);
  }
  CHECK(bernoulli(12) == r(-691, 2730));
}

TEST_CASE("Bernoulli table satisfies its defining recurrence") {
  for (unsigned long m = 1; m <= 40; ++m) {
    BigRational sum;
    for (unsigned long k = 0; k <= m; ++k) {
      sum += BigRational(binomial(m + 1, k)) * bernoulli(k);
    }
    CHECK_MESSAGE(sum.is_zero(), "m = " << m);
  }
}

TEST_CASE("Euler numbers") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(6) == -61);
  CHECK(euler_number(8) == 1385);
  CHECK(euler_number(10) == -50521);
  CHECK(euler_number(7) == 0);
  // sum_k C(2n, 2k) E_{2k} = 0 for n >= 1
  for (unsigned long n = 1; n <= 30; ++n) {
    BigInt sum = 0;
    for (unsigned long k = 0; k <= n; ++k) {
      sum += binomial(2 * n, 2 * k) * euler_number(2 * k);
    }
    CHECK_MESSAGE(sum == 0, "n = " << n);
  }
}

TEST_CASE("even zeta coefficients") {
  CHECK(even_zeta_coeff(1) == r(1, 6));
  CHECK(even_zeta_coeff(2) == r(1, 90));
  CHECK(even_zeta_coeff(3) == r(1, 945));
  CHECK(even_zeta_coeff(4) == r(1, 9450));
  CHECK_THROWS_AS(even_zeta_coeff(0), std::invalid_argument);
}

TEST_CASE("Lerch leading coefficients") {
  CHECK(lerch_leading_coeff(1) == r(7, 180));
  CHECK(lerch_leading_coeff(3) == r(19, 56700));
  CHECK(lerch_leading_coeff(5) == BigRational(BigInt(1453), BigInt(425675250)));
  CHECK_THROWS_AS(lerch_leading_coeff(2), WrongResidueClass);
  CHECK_THROWS_AS(lerch_leading_coeff(4), WrongResidueClass);
  CHECK_THROWS_AS(lerch_leading_coeff(0), std::invalid_argument);
}

TEST_CASE("Dirichlet beta coefficients against the direct series") {
  CHECK(dirichlet_beta_coeff(0) == r(1, 4));
  CHECK(dirichlet_beta_coeff(1) == r(1, 32));
  CHECK(dirichlet_beta_coeff(2) == r(5, 1536));
  // beta(2n+1) = sum_k (-1)^k / (2k+1)^(2n+1); alternating, so the partial sum
  // brackets the limit within the first omitted term.
  const Bits bits{128};
  for (unsigned long n = 1; n <= 4; ++n) {
    HReal sum(bits);
    const long terms = 4000;
    for (long k = 0; k < terms; ++k) {
      const HReal term = HReal::from_int(1, bits) / pow(HReal::from_int(2 * k + 1, bits), 2 * n + 1);
      sum += (k % 2 == 0) ? term : -term;
    }
    const HReal omitted = HReal::from_int(1, bits) / pow(HReal::from_int(2 * terms + 1, bits), 2 * n + 1);
    const HReal series = sum.widened(magnitude_upper(omitted));
    const HReal closed = HReal::from_rational(dirichlet_beta_coeff(n), bits) * pow(pi(bits), 2 * n + 1);
    CHECK_MESSAGE(overlaps(series, closed), "n = " << n);
  }
}

TEST_CASE("results are in lowest terms with positive denominator") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-100000, 100000);
  for (int i = 0; i < 200; ++i) {
    long den = dist(rng);
    if (den == 0) {
      den = 1;
    }
    const BigRational a(BigInt(dist(rng)), BigInt(den));
    const BigRational b(BigInt(dist(rng)), BigInt(37));
    for (const BigRational& x : {a + b, a - b, a * b}) {
      CHECK(x.denominator() > 0);
      BigInt g;
      mpz_gcd(g.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
      CHECK(g == 1);
    }
  }
  for (unsigned long n = 0; n <= 30; ++n) {
    CHECK(bernoulli(n).denominator() > 0);
  }
}

TEST_CASE("even zeta coefficient times pi^2n matches the direct oracle") {
  const Digits digits{60};
  for (int n = 1; n <= 10; ++n) {
    const ZetaResult direct = zeta_direct(2 * n, digits);
    const ZetaResult exact = zeta_even_exact(n, digits);
    CHECK_MESSAGE(overlaps(direct.value, exact.value), "n = " << n);
  }
}

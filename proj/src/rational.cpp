#include "oddzeta/rational.hpp"

#include "oddzeta/errors.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace oddzeta {

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw std::domain_error("BigRational: zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational BigRational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return BigRational(BigInt(text));
    }
    return BigRational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

BigInt BigRational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(value_))); }

BigRational BigRational::reciprocal() const {
  if (is_zero()) {
    throw std::domain_error("BigRational: reciprocal of zero");
  }
  return BigRational(value_.get_den(), value_.get_num());
}

std::string BigRational::to_string() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("BigRational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigRational pow(const BigRational& base, unsigned long exponent) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
  return BigRational(num, den);
}

namespace {

// B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k, the recurrence with B_1 = -1/2.
class BernoulliTable {
 public:
  BigRational get(unsigned long n) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= n) {
      const unsigned long m = values_.size();
      if (m == 0) {
        values_.emplace_back(1);
        continue;
      }
      if (m > 1 && m % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      BigRational acc;
      for (unsigned long k = 0; k < m; ++k) {
        if (!values_[k].is_zero()) {
          acc += BigRational(binomial(m + 1, k)) * values_[k];
        }
      }
      values_.push_back(-acc / BigRational(static_cast<long>(m + 1)));
    }
    return values_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<BigRational> values_;
};

// Entringer triangle E(n, k) = E(n, k-1) + E(n-1, n-k); the diagonal E(n, n)
// gives the zigzag numbers, whose even entries are the unsigned secant numbers.
class ZigzagTable {
 public:
  BigInt get(unsigned long n) {
    std::lock_guard lock(mutex_);
    while (diagonal_.size() <= n) {
      const unsigned long m = diagonal_.size();
      std::vector<BigInt> row(m + 1);
      row[0] = m == 0 ? 1 : 0;
      for (unsigned long k = 1; k <= m; ++k) {
        row[k] = row[k - 1] + last_row_[m - k];
      }
      diagonal_.push_back(row[m]);
      last_row_ = std::move(row);
    }
    return diagonal_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<BigInt> diagonal_;
  std::vector<BigInt> last_row_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

ZigzagTable& zigzag_table() {
  static ZigzagTable table;
  return table;
}

BigInt power_of_two(unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

}  // namespace

BigRational bernoulli(unsigned long n) { return bernoulli_table().get(n); }

BigInt euler_number(unsigned long n) {
  if (n % 2 == 1) {
    return 0;
  }
  BigInt magnitude = zigzag_table().get(n);
  return (n / 2) % 2 == 0 ? magnitude : BigInt(-magnitude);
}

BigRational even_zeta_coeff(unsigned long n) {
  if (n == 0) {
    throw std::invalid_argument("even_zeta_coeff: n must be >= 1");
  }
  const BigRational sign = (n % 2 == 1) ? 1 : -1;
  return sign * BigRational(power_of_two(2 * n)) * bernoulli(2 * n) /
         BigRational(BigInt(2 * factorial(2 * n)));
}

BigRational lerch_leading_coeff(unsigned long n) {
  if (n == 0) {
    throw std::invalid_argument("lerch_leading_coeff: n must be >= 1");
  }
  if ((2 * n + 1) % 4 != 3) {
    throw WrongResidueClass("lerch_leading_coeff: 2n+1 = " + std::to_string(2 * n + 1) +
                            " is 1 mod 4; the single-series Lerch form needs 3 mod 4");
  }
  BigRational sum;
  for (unsigned long k = 0; k <= n + 1; ++k) {
    const unsigned long j = 2 * n + 2 - 2 * k;
    const BigRational term = bernoulli(2 * k) * bernoulli(j) /
                             BigRational(BigInt(factorial(2 * k) * factorial(j)));
    if (k % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return BigRational(power_of_two(2 * n)) * sum;
}

BigRational dirichlet_beta_coeff(unsigned long n) {
  const BigRational sign = (n % 2 == 0) ? 1 : -1;
  return sign * BigRational(euler_number(2 * n)) /
         BigRational(BigInt(power_of_two(2 * n + 2) * factorial(2 * n)));
}

}  // namespace oddzeta

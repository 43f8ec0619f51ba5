#include "oddzeta/equidist.hpp"

#include "oddzeta/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace oddzeta {

namespace {

constexpr std::int64_t kBruteLimit = 1000000;
constexpr std::int64_t kHighPrecisionLimit = 10000;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double value) {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    magnitude_ += std::fabs(value);
    ++count_;
  }
  double result() const { return sum_ + compensation_; }
  // |computed - exact| <= 2u |S| + 2 n u^2 sum |x_i|
  double error_bound() const {
    const double u = std::ldexp(1.0, -53);
    return 2.0 * u * std::fabs(result()) + 2.0 * static_cast<double>(count_) * u * u * magnitude_;
  }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
  double magnitude_ = 0.0;
  std::int64_t count_ = 0;
};

double upper_double(const Mpfr& x) { return mpfr_get_d(x.get(), MPFR_RNDU); }

HReal double_with_radius(double value, double radius) {
  Mpfr mid(53);
  mpfr_set_d(mid.get(), value, MPFR_RNDN);
  Mpfr rad(32);
  mpfr_set_d(rad.get(), radius, MPFR_RNDU);
  return HReal::from_parts(mid, rad);
}

// A double-double split hi + lo of x, with |x - hi - lo| bounded by the returned error.
struct Split {
  double hi = 0.0;
  double lo = 0.0;
  double error = 0.0;
};

Split split_double_double(const HReal& x) {
  Split out;
  out.hi = x.to_double();
  const HReal rest = x - HReal::from_double(out.hi, x.precision());
  out.lo = rest.to_double();
  out.error = upper_double(magnitude_upper(rest - HReal::from_double(out.lo, x.precision())));
  return out;
}

KernelSum brute_double(const HReal& t, std::int64_t x) {
  const Bits bits{std::max<long>(t.precision().value, 128)};
  const HReal two_pi = pi(bits).mul_int(2);
  HReal theta = t.rounded_to(bits).mul_int(2);
  {
    Mpfr quotient(64);
    mpfr_div(quotient.get(), theta.mid().get(), two_pi.mid().get(), MPFR_RNDN);
    BigInt turns;
    mpfr_get_z(turns.get_mpz_t(), quotient.get(), MPFR_RNDN);
    theta -= two_pi * HReal::from_integer(turns, bits);
  }
  const Split angle = split_double_double(theta);
  const Split period = split_double_double(two_pi);
  // Per-term angle error: representation error scaled by n, the period error
  // scaled by the number of turns removed, and a handful of roundings of
  // quantities below 8 in magnitude.
  const double rounding = std::ldexp(1.0, -46);

  CompensatedSum real;
  CompensatedSum imag;
  double radius = 0.0;
  for (std::int64_t n = -x; n <= x; ++n) {
    const auto nd = static_cast<double>(n);
    const double product = nd * angle.hi;
    const double product_error = std::fma(nd, angle.hi, -product);
    const double turns = std::nearbyint(product / period.hi);
    double reduced = std::fma(-turns, period.hi, product);
    reduced += product_error + nd * angle.lo - turns * period.lo;
    real.add(std::cos(reduced));
    imag.add(std::sin(reduced));
    radius += std::fabs(nd) * angle.error + std::fabs(turns) * period.error + rounding;
  }
  KernelSum out;
  out.real = double_with_radius(real.result(), radius + real.error_bound());
  out.imag = double_with_radius(imag.result(), radius + imag.error_bound());
  out.terms = 2 * x + 1;
  out.mode = BruteMode::compensated_double;
  return out;
}

KernelSum brute_high_precision(const HReal& t, std::int64_t x) {
  const HReal theta = t.mul_int(2);
  HReal real = HReal::from_int(1, t.precision());
  HReal imag(t.precision());
  // Terms n and -n share |angle|: cos is even and sin is odd, so each pair
  // contributes 2 cos to the real part and cancels in the imaginary part.
  for (std::int64_t n = 1; n <= x; ++n) {
    const HReal angle = theta.mul_int(n);
    const HReal c = hreal_cos(angle);
    const HReal s = hreal_sin(angle);
    real += c + c;
    imag += s - s;
  }
  KernelSum out;
  out.real = std::move(real);
  out.imag = std::move(imag);
  out.terms = 2 * x + 1;
  out.mode = BruteMode::high_precision;
  return out;
}

HReal checked_sine(const HReal& t) {
  HReal sine = hreal_sin(t);
  if (!sine.provably_nonzero(kNonzeroFactor)) {
    throw NearSingularity("sin t is not provably nonzero at the working precision");
  }
  return sine;
}

}  // namespace

HReal dirichlet_kernel_closed(const HReal& t, std::int64_t x) {
  if (x < 0) {
    throw std::invalid_argument("dirichlet_kernel_closed requires x >= 0");
  }
  const HReal denominator = checked_sine(t);
  return hreal_sin(t.mul_int(2 * x + 1)) / denominator;
}

KernelSum dirichlet_kernel_brute(const HReal& t, std::int64_t x, BruteMode mode) {
  if (x < 0 || x > kBruteLimit) {
    throw std::invalid_argument("dirichlet_kernel_brute requires 0 <= x <= 10^6");
  }
  if (mode == BruteMode::automatic) {
    mode = x <= kHighPrecisionLimit ? BruteMode::high_precision : BruteMode::compensated_double;
  }
  return mode == BruteMode::high_precision ? brute_high_precision(t, x) : brute_double(t, x);
}

WeylReport weyl_average(const HReal& t, std::int64_t x, BruteMode mode) {
  if (x < 1) {
    throw std::invalid_argument("weyl_average requires x >= 1");
  }
  WeylReport report;
  report.t = t;
  report.x = x;
  const HReal sine = checked_sine(t);
  report.closed = hreal_sin(t.mul_int(2 * x + 1)) / sine;
  report.brute = dirichlet_kernel_brute(t, x, mode);
  report.normalized = report.brute.real.abs().div_int(2 * x);
  report.bound = HReal::from_int(1, t.precision()) / sine.abs().mul_int(2 * x);
  report.brute_matches_closed = agree_within_bounds(report.brute.real, report.closed);
  report.within_bound = !(report.normalized - report.bound).provably_positive();
  return report;
}

std::vector<WeylReport> weyl_grid(const HReal& t, const std::vector<std::int64_t>& xs) {
  std::vector<WeylReport> out;
  out.reserve(xs.size());
  for (const std::int64_t x : xs) {
    out.push_back(weyl_average(t, x));
  }
  return out;
}

SineProbe sine_probe(const HReal& alpha, std::int64_t k, const ContinuedFraction& cf) {
  if (k == 0) {
    throw std::invalid_argument("sine_probe requires k != 0");
  }
  const Bits bits = alpha.precision();
  const HReal pi_value = pi(bits);
  const HReal beta = alpha / pi_value;
  if (cf.certified_terms == 0 || cf.quotients.front() != beta.mid_rational().floor()) {
    throw std::invalid_argument("sine_probe: continued fraction is not that of alpha/pi");
  }
  const BigInt magnitude = k < 0 ? BigInt(-k) : BigInt(k);
  std::size_t j = 0;
  while (j < cf.certified_terms && cf.convergents[j].q <= magnitude) {
    ++j;
  }
  if (j == cf.certified_terms) {
    throw InsufficientPrecision("sine_probe: no certified convergent denominator exceeds |k|");
  }

  SineProbe probe;
  probe.alpha = alpha;
  probe.k = k;
  probe.angle = alpha.mul_int(k);
  const BigRational scaled = beta.mul_int(k).mid_rational();
  probe.nearest_multiple = (scaled + BigRational(1, 2)).floor();
  probe.distance_to_pi_multiple =
      (probe.angle - pi_value * HReal::from_integer(probe.nearest_multiple, bits)).abs();
  probe.sin_value = hreal_sin(probe.angle);
  if (!probe.sin_value.provably_nonzero(kNonzeroFactor)) {
    throw InsufficientPrecision("sine_probe: sin(alpha k) is not provably nonzero");
  }
  probe.convergent_index = j;
  probe.q_next = cf.convergents[j].q;
  probe.convergent_lower_bound = HReal::from_rational(BigRational(BigInt(1), probe.q_next), bits);
  probe.measured_ratio = probe.sin_value.abs() / probe.convergent_lower_bound;
  const HReal concavity_floor = (probe.distance_to_pi_multiple / pi_value).mul_int(2);
  probe.concavity_holds = !(probe.sin_value.abs() - concavity_floor).provably_negative();
  return probe;
}

HReal sine_product_partial(const HReal& y, std::int64_t terms) {
  if (terms < 1) {
    throw std::invalid_argument("sine_product_partial requires N >= 1");
  }
  if (mpfr_cmp_si(magnitude_upper(y).get(), terms) >= 0) {
    throw std::invalid_argument("sine_product_partial requires N > |y|");
  }
  const Bits bits = y.precision();
  const HReal one = HReal::from_int(1, bits);
  const HReal y_squared = y * y;
  HReal product = pi(bits) * y;
  for (std::int64_t n = 1; n <= terms; ++n) {
    product *= one - y_squared.div_int(n).div_int(n);
  }
  // The omitted factors lie in [1 - y^2/N, 1], so sin(pi y) = product * T with |1 - T| <= y^2/N.
  Mpfr tail = magnitude_upper(y_squared);
  mpfr_div_si(tail.get(), tail.get(), static_cast<long>(terms), MPFR_RNDU);
  mpfr_mul(tail.get(), tail.get(), magnitude_upper(product).get(), MPFR_RNDU);
  return product.widened(tail);
}

}  // namespace oddzeta

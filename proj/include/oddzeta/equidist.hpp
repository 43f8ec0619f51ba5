#pragma once

/**
 * @file equidist.hpp
 * @brief Dirichlet-kernel sums, Weyl averages and sine nonvanishing probes.
 *
 * The symmetric exponential sum sum_{-x<=n<=x} e^(i 2 t n) has the closed form
 * sin((2x+1)t)/sin t. The brute-force side sums it term by term, either in
 * HReal arithmetic or (for large x) in double precision with double-double
 * angle reduction and compensated summation, each with an explicit error bound.
 */

#include "oddzeta/diophantine.hpp"
#include "oddzeta/hreal.hpp"

#include <cstdint>
#include <vector>

namespace oddzeta {

/// A quantity counts as nonzero when |mid| > 4 * radius.
inline constexpr double kNonzeroFactor = 4.0;

enum class BruteMode {
  automatic,       // high precision for x <= 10^4, compensated double above
  high_precision,
  compensated_double,
};

struct KernelSum {
  HReal real;
  HReal imag;  // zero by symmetry up to the recorded bound
  std::int64_t terms = 0;
  BruteMode mode = BruteMode::automatic;
};

/// sin((2x+1)t) / sin t. Throws NearSingularity unless sin t is provably nonzero.
HReal dirichlet_kernel_closed(const HReal& t, std::int64_t x);

/// Term-by-term sum over -x <= n <= x of (cos 2tn, sin 2tn). Requires 0 <= x <= 10^6.
KernelSum dirichlet_kernel_brute(const HReal& t, std::int64_t x, BruteMode mode = BruteMode::automatic);

struct WeylReport {
  HReal t;
  std::int64_t x = 0;
  KernelSum brute;
  HReal closed;
  HReal normalized;  // |brute| / (2x)
  HReal bound;       // 1 / (2x |sin t|)
  bool brute_matches_closed = false;
  bool within_bound = false;  // normalized <= bound is not refuted by the enclosures
};

/// Throws NearSingularity unless sin t is provably nonzero; requires x >= 1.
WeylReport weyl_average(const HReal& t, std::int64_t x, BruteMode mode = BruteMode::automatic);

/// weyl_average over x = 10^3, 10^4, 10^5, 10^6 (or a caller-supplied grid).
std::vector<WeylReport> weyl_grid(const HReal& t, const std::vector<std::int64_t>& xs = {1000, 10000, 100000,
                                                                                        1000000});

struct SineProbe {
  HReal alpha;
  std::int64_t k = 0;
  HReal angle;                      // alpha k
  BigInt nearest_multiple;          // m with m pi closest to alpha k
  HReal distance_to_pi_multiple;    // |alpha k - m pi|
  HReal sin_value;
  std::size_t convergent_index = 0;  // j with q_j the first certified denominator above |k|
  BigInt q_next;
  HReal convergent_lower_bound;      // 1 / q_j, floor for |sin(alpha k)|
  HReal measured_ratio;              // |sin(alpha k)| / convergent_lower_bound
  bool concavity_holds = false;      // |sin| >= (2/pi) distance
};

/**
 * sin(alpha k) with the convergent floor derived from @p cf, the continued
 * fraction of alpha/pi: for 0 < |k| < q_j, |k alpha/pi - m| >= 1/(2 q_j), hence
 * |sin(alpha k)| >= (2/pi) pi/(2 q_j) = 1/q_j.
 *
 * Throws InsufficientPrecision when sin(alpha k) is not provably nonzero or
 * when no certified q_j exceeds |k|.
 */
SineProbe sine_probe(const HReal& alpha, std::int64_t k, const ContinuedFraction& cf);

/// pi y prod_{n=1}^{N} (1 - y^2/n^2), radius widened by |partial| y^2 / N. Requires N > |y|.
HReal sine_product_partial(const HReal& y, std::int64_t terms);

}  // namespace oddzeta

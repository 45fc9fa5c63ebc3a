#pragma once

// Numerics for B_m, the distribution of a sum of m independent uniform
// {-1,+1} draws. The support is the lattice {-m, -m+2, ..., m-2, m};
// writing k for the number of +1 draws, b = 2k - m and
//
//   Pr(B_m = b) = C(m, k) 2^-m.
//
// Binomial coefficients go through lgamma so nothing overflows, with exact
// integer arithmetic below a small-m cutoff. Tail probabilities switch from
// exact summation to the regularized incomplete beta function (or, on
// request, a normal approximation with continuity correction) once m
// exceeds a configurable cutoff; the result records which path was taken.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace olo {

struct RademacherSum {
  int m = 0;  // number of +-1 summands, must be >= 0
};

namespace detail {

inline void require_valid(const RademacherSum& d) {
  if (d.m < 0) throw std::invalid_argument("RademacherSum: m must be >= 0");
}

inline constexpr double kLn2 = 0.69314718055994530942;

// Largest m for which binomial coefficients are computed by exact integer
// arithmetic. C(40, 20) * 21 still fits comfortably in 64 bits.
inline constexpr int kSmallBinomialMax = 40;

inline double log_binomial(int n, int k) {
  // Canonicalize so C(n, k) and C(n, n - k) round identically; the two
  // subtractions below are not commutative in floating point.
  if (k > n - k) k = n - k;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// C(n, k) via the multiplicative recurrence; every intermediate is an exact
// integer, so the result is exact for n <= kSmallBinomialMax.
inline double binomial_small(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  unsigned long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (unsigned long long)(n - k + i) / (unsigned long long)i;
  return (double)c;
}

// Compensated (Neumaier) summation. Tail sums over thousands of terms have
// to survive a 1e-12 consistency check, so plain accumulation is not enough.
struct StableSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

// Continued fraction for the regularized incomplete beta function,
// evaluated with the modified Lentz algorithm.
inline double ibeta_continued_fraction(double a, double b, double x) {
  const int max_iterations = 400;
  const double epsilon = 1e-16;
  const double tiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int s = 1; s <= max_iterations; ++s) {
    const int s2 = 2 * s;
    double aa = s * (b - s) * x / ((qam + s2) * (a + s2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + s) * (qab + s) * x / ((a + s2) * (qap + s2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < epsilon) break;
  }
  return h;
}

inline double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || std::isnan(x) || x < 0.0 || x > 1.0) {
    throw std::invalid_argument("regularized_incomplete_beta: bad arguments");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  // Use the symmetry I_x(a,b) = 1 - I_{1-x}(b,a) so the continued fraction
  // is evaluated on the side where it converges quickly.
  if (x > (a + 1.0) / (a + b + 2.0)) {
    return 1.0 - regularized_incomplete_beta(b, a, 1.0 - x);
  }
  const double log_prefix = a * std::log(x) + b * std::log1p(-x) + std::lgamma(a + b) -
                            std::lgamma(a) - std::lgamma(b);
  return std::exp(log_prefix) * ibeta_continued_fraction(a, b, x) / a;
}

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

}  // namespace detail

inline bool in_support(const RademacherSum& d, long long b) {
  detail::require_valid(d);
  if (b > d.m || b < -(long long)d.m) return false;
  return (b + d.m) % 2 == 0;
}

// log Pr(B_m = b); -infinity off the lattice.
inline double log_pmf(const RademacherSum& d, long long b) {
  if (!in_support(d, b)) return -std::numeric_limits<double>::infinity();
  const int k = (int)((b + d.m) / 2);
  return detail::log_binomial(d.m, k) - d.m * detail::kLn2;
}

// Pr(B_m = b). Exact (integer binomial times a power of two) for
// m <= exact_max, log-space otherwise.
inline double pmf(const RademacherSum& d, long long b, int exact_max = detail::kSmallBinomialMax) {
  if (!in_support(d, b)) return 0.0;
  const int k = (int)((b + d.m) / 2);
  if (d.m <= std::min(exact_max, detail::kSmallBinomialMax)) {
    return detail::binomial_small(d.m, k) * std::exp2((double)-d.m);
  }
  return std::exp(log_pmf(d, b));
}

enum class TailMethod { exact_sum, incomplete_beta, normal_approx };

struct TailProbabilities {
  double below = 0.0;  // Pr(B_m < threshold), strict
  double above = 0.0;  // Pr(B_m > threshold), strict
  TailMethod method = TailMethod::exact_sum;
};

struct TailOptions {
  int exact_max = 10000;  // largest m handled by exact summation
  TailMethod approximation = TailMethod::incomplete_beta;  // path used above exact_max
};

namespace detail {

// Pr(X <= k) for X ~ Binomial(m, 1/2), by direct summation. Always sums the
// shorter tail (smallest terms first) and complements if needed.
inline double half_binomial_cdf_exact(int m, long long k) {
  if (k < 0) return 0.0;
  if (k >= m) return 1.0;
  if (2 * k + 1 > m) return 1.0 - half_binomial_cdf_exact(m, m - k - 1);
  StableSum s;
  const bool small = m <= kSmallBinomialMax;
  for (long long i = 0; i <= k; ++i) {
    const double term = small ? binomial_small(m, (int)i) * std::exp2((double)-m)
                              : std::exp(log_binomial(m, (int)i) - m * kLn2);
    s.add(term);
  }
  return std::min(1.0, s.value());
}

// Same quantity through the incomplete beta function:
// Pr(X <= k) = I_{1/2}(m - k, k + 1).
inline double half_binomial_cdf_beta(int m, long long k) {
  if (k < 0) return 0.0;
  if (k >= m) return 1.0;
  return regularized_incomplete_beta((double)(m - k), (double)(k + 1), 0.5);
}

// Normal approximation with continuity correction. X has mean m/2 and
// standard deviation sqrt(m)/2, so (2k + 1 - m)/sqrt(m) is the corrected
// z-score of the cell boundary between k and k + 1.
inline double half_binomial_cdf_normal(int m, long long k) {
  if (k < 0) return 0.0;
  if (k >= m) return 1.0;
  return normal_cdf((2.0 * (double)k + 1.0 - m) / std::sqrt((double)m));
}

}  // namespace detail

// Strict lower and upper tail probabilities of B_m around an arbitrary real
// threshold. Exact summation up to opt.exact_max summands, then the
// configured approximation; the method actually used is reported back.
inline TailProbabilities tails(const RademacherSum& d, double threshold,
                               const TailOptions& opt = {}) {
  detail::require_valid(d);
  if (std::isnan(threshold)) throw std::invalid_argument("tails: threshold is NaN");
  const int m = d.m;

  // Work in count space: b = 2k - m, so b < threshold iff k < u.
  const double u = 0.5 * (threshold + m);
  const bool lattice_hit = u >= 0.0 && u <= (double)m && std::floor(u) == u;
  double below_d = lattice_hit ? u - 1.0 : std::floor(u);        // largest k strictly below
  double above_d = lattice_hit ? u + 1.0 : std::floor(u) + 1.0;  // smallest k strictly above
  below_d = std::max(-1.0, std::min((double)m, below_d));
  above_d = std::max(0.0, std::min((double)m + 1.0, above_d));
  const long long k_below = (long long)below_d;
  const long long k_above = (long long)above_d;

  TailProbabilities result;
  const TailMethod method =
      m <= opt.exact_max ? TailMethod::exact_sum : opt.approximation;
  result.method = method;
  switch (method) {
    case TailMethod::exact_sum:
      result.below = detail::half_binomial_cdf_exact(m, k_below);
      result.above = detail::half_binomial_cdf_exact(m, m - k_above);
      break;
    case TailMethod::incomplete_beta:
      result.below = detail::half_binomial_cdf_beta(m, k_below);
      result.above = detail::half_binomial_cdf_beta(m, m - k_above);
      break;
    case TailMethod::normal_approx:
      result.below = detail::half_binomial_cdf_normal(m, k_below);
      result.above = detail::half_binomial_cdf_normal(m, m - k_above);
      break;
  }
  return result;
}

// E|B_T| for even T: with M = T/2, E|B_T| = 2M C(2M, M) 2^-2M.
// Odd horizons have no such product form and are rejected.
inline double mean_abs_deviation(int T) {
  if (T < 2) throw std::invalid_argument("mean_abs_deviation: T must be >= 2");
  if (T % 2 != 0) throw std::domain_error("mean_abs_deviation: closed form needs even T");
  const int M = T / 2;
  if (T <= detail::kSmallBinomialMax) {
    return (double)T * detail::binomial_small(T, M) * std::exp2((double)-T);
  }
  return std::exp(std::log((double)T) + detail::log_binomial(T, M) - T * detail::kLn2);
}

// c_M defined by C(2M, M) = 4^M / sqrt(pi M) * (1 - c_M / M); this returns
// the ratio C(2M, M) sqrt(pi M) / 4^M, from which c_M = M (1 - ratio).
inline double central_binomial_ratio(int M) {
  if (M < 1) throw std::invalid_argument("central_binomial_ratio: M must be >= 1");
  return std::exp(detail::log_binomial(2 * M, M) - 2 * M * detail::kLn2 +
                  0.5 * (std::log(std::numbers::pi) + std::log((double)M)));
}

// E[f(offset + B_m)] as an exact weighted sum over the m + 1 lattice points.
// f must be finite everywhere on the shifted support.
template <class F>
double expect(const RademacherSum& d, F&& f, double offset = 0.0) {
  detail::require_valid(d);
  detail::StableSum acc;
  for (int k = 0; k <= d.m; ++k) {
    const long long b = 2LL * k - d.m;
    const double fx = f(offset + (double)b);
    if (!std::isfinite(fx)) {
      throw std::domain_error("expect: f is not finite at a support point");
    }
    acc.add(pmf(d, b) * fx);
  }
  return acc.value();
}

// log E[f(offset + B_m)] for strictly positive f, given log f. Evaluated by
// log-sum-exp so it stays finite even when E[f] itself would overflow.
// log_f may return -infinity (f == 0); NaN or +infinity is an error.
template <class F>
double log_expect(const RademacherSum& d, F&& log_f, double offset = 0.0) {
  detail::require_valid(d);
  std::vector<double> terms;
  terms.reserve((size_t)d.m + 1);
  double peak = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= d.m; ++k) {
    const long long b = 2LL * k - d.m;
    const double lf = log_f(offset + (double)b);
    if (std::isnan(lf) || lf == std::numeric_limits<double>::infinity()) {
      throw std::domain_error("log_expect: log f must be < +infinity and not NaN");
    }
    const double t = log_pmf(d, b) + lf;
    terms.push_back(t);
    peak = std::max(peak, t);
  }
  if (peak == -std::numeric_limits<double>::infinity()) return peak;
  detail::StableSum acc;
  for (double t : terms) acc.add(std::exp(t - peak));
  return peak + std::log(acc.value());
}

}  // namespace olo

#pragma once

// Exact and asymptotic evaluation of the worst-case counting formulas:
// distinct-LCS lower/upper bounds, the maximum embedding counts E(n,m,l)
// with their closed-form optima, and the naive-backtrace overhead factors.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lcsb {

using BigInt = boost::multiprecision::cpp_int;

inline const double kGoldenRatio = (1.0 + std::sqrt(5.0)) / 2.0;

/// Log-space value with a best-effort double rendering (infinity when the
/// magnitude exceeds double range).
struct AsymptoticEstimate {
  double ln_value = 0.0;
  double value = 1.0;

  static AsymptoticEstimate from_ln(double ln) { return {ln, std::exp(ln)}; }
};

/// Natural log of a positive BigInt, exact to double precision.
inline double ln_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("ln_big requires a positive value");
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 900) return std::log(x.convert_to<double>());
  const unsigned shift = static_cast<unsigned>(bits) - 900;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

inline BigInt binomial(std::uint64_t r, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > r) return 0;
  std::uint64_t kk = static_cast<std::uint64_t>(k);
  if (kk > r - kk) kk = r - kk;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= kk; ++i) {
    result *= r - kk + i;
    result /= i;
  }
  return result;
}

inline BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

/// Lower bound on the maximum number of distinct LCSs at total input
/// length t: with m = floor(t/2) and z = (-m) mod 3, 3^((m-2z)/3) * 2^z.
inline BigInt d_lower(std::int64_t t) {
  if (t < 4) throw std::domain_error("d_lower requires t >= 4");
  const std::int64_t m = t / 2;
  const std::int64_t z = ((-m) % 3 + 3) % 3;
  const std::int64_t e3 = (m - 2 * z) / 3;  // integral: m == 2z (mod 3)
  BigInt result = 1;
  for (std::int64_t i = 0; i < e3; ++i) result *= 3;
  for (std::int64_t i = 0; i < z; ++i) result *= 2;
  return result;
}

/// Upper bound 4^(t/5) on the number of distinct LCSs.
inline AsymptoticEstimate d_upper(std::uint64_t t) {
  return AsymptoticEstimate::from_ln(t * std::log(4.0) / 5.0);
}

/// Tight upper bound when neither input repeats a character; coincides
/// with the lower-bound construction value.
inline BigInt d_upper_distinct_chars(std::int64_t t) {
  if (t < 4) throw std::domain_error("d_upper_distinct_chars requires t >= 4");
  return d_lower(t);
}

namespace detail {

// floor((a + sqrt(d)) / 10) for nonnegative integers a, d, evaluated
// without floating point so perfect squares never misround.
inline std::int64_t floor_add_sqrt_div10(std::int64_t a, std::int64_t d) {
  std::int64_t k = (a + static_cast<std::int64_t>(std::sqrt(double(d)))) / 10 - 2;
  for (;;) {
    const std::int64_t r = 10 * (k + 1) - a;
    if (r <= 0 || r * r <= d)
      ++k;
    else
      return k;
  }
}

// ceil((a - sqrt(d)) / 10).
inline std::int64_t ceil_sub_sqrt_div10(std::int64_t a, std::int64_t d) {
  std::int64_t k = (a - static_cast<std::int64_t>(std::sqrt(double(d)))) / 10 - 2;
  for (;;) {
    const std::int64_t r = a - 10 * k;
    if (r <= 0 || r * r <= d) return k;
    ++k;
  }
}

// floor((a - sqrt(d)) / 10).
inline std::int64_t floor_sub_sqrt_div10(std::int64_t a, std::int64_t d) {
  const std::int64_t c = ceil_sub_sqrt_div10(a, d);
  const std::int64_t r = a - 10 * c;
  if (r >= 0 && r * r == d) return c;  // exact hit
  return c - 1;
}

}  // namespace detail

/// The y maximizing C(m-y, l-y) * C(n+y-l, y), clamped into [0, l].
inline std::int64_t optimal_y(std::int64_t m, std::int64_t n, std::int64_t l) {
  if (!(0 <= l && l <= m && m <= n)) throw std::domain_error("optimal_y requires l <= m <= n");
  const std::int64_t den = m + n - 2 * l;
  if (den == 0) return 0;  // forces l == m == n, one embedding
  const std::int64_t num = l * (n - l) + l - m;
  std::int64_t y = num >= 0 ? (num + den - 1) / den : -((-num) / den);
  if (y < 0) y = 0;
  if (y > l) y = l;
  return y;
}

/// E(n,m,l): maximum number of embeddings of one LCS of length l in inputs
/// of lengths m <= n.
inline BigInt max_embeddings(std::int64_t m, std::int64_t n, std::int64_t l) {
  const std::int64_t y = optimal_y(m, n, l);
  return binomial(m - y, l - y) * binomial(n + y - l, y);
}

/// E(n,n,l) as the product of the two half-split binomials.
inline BigInt max_embeddings_equal(std::int64_t n, std::int64_t l) {
  if (!(0 <= l && l <= n)) throw std::domain_error("max_embeddings_equal requires 0 <= l <= n");
  return binomial(n - l / 2, (l + 1) / 2) * binomial(n - (l + 1) / 2, l / 2);
}

/// Optimal LCS length for the m = n embedding maximum, with the sigma/tau
/// thresholds that decide it.
struct OptimalLength {
  std::int64_t l_star = 0;
  std::vector<std::int64_t> alternatives;
  double sigma = 0.0;
  double tau = 0.0;
};

inline OptimalLength optimal_l_equal(std::int64_t n) {
  if (n < 1) throw std::domain_error("optimal_l_equal requires n >= 1");
  const double nd = static_cast<double>(n);
  const double sigma = (5 * nd - 1 - std::sqrt(5 * (nd + 1) * (nd + 1) - 4)) / 5;
  const double tau = (5 * nd - std::sqrt(5.0) * (nd + 1)) / 5;
  OptimalLength res;
  res.sigma = sigma;
  res.tau = tau;
  // sigma integral is an exact algebraic event: 5(n+1)^2-4 a perfect square
  // with the right residue.  Detect it in integer arithmetic.
  const std::int64_t disc = 5 * (n + 1) * (n + 1) - 4;
  const std::int64_t root = static_cast<std::int64_t>(std::llround(std::sqrt(double(disc))));
  const bool sigma_integral = root * root == disc && (5 * n - 1 - root) % 5 == 0;
  if (sigma_integral) {
    const std::int64_t s = (5 * n - 1 - root) / 5;
    res.l_star = s;
    res.alternatives = {s, s + 1};
  } else {
    const auto ceil_sigma = static_cast<std::int64_t>(std::ceil(sigma - 1e-9));
    if (ceil_sigma % 2 == 0) {
      res.l_star = ceil_sigma;
    } else {
      res.l_star = static_cast<std::int64_t>(std::ceil(tau));
    }
    res.alternatives = {res.l_star};
  }
  return res;
}

/// Closed form for max over l of E(n,n,l).
inline BigInt max_embeddings_equal_opt(std::int64_t n) {
  if (n < 1) throw std::domain_error("max_embeddings_equal_opt requires n >= 1");
  const std::int64_t d1 = 5 * (n + 1) * (n + 1);      // under sqrt for (1 +- 1/sqrt5)(n+1)/2
  const std::int64_t d2 = d1 - 4;                      // under sqrt for sigma-derived indices
  const std::int64_t r1 = detail::floor_add_sqrt_div10(5 * (n + 1), d1);
  const std::int64_t k1 = detail::ceil_sub_sqrt_div10(5 * n - 1, d2);
  const std::int64_t r2 = detail::floor_add_sqrt_div10(5 * n + 1, d2);
  const std::int64_t k2 = detail::floor_sub_sqrt_div10(5 * (n + 1), d1);
  return binomial(r1, k1) * binomial(r2, k2);
}

/// Limit form phi^2 sqrt(5) / (2 pi) * (phi^2)^n / n, in log space.
inline AsymptoticEstimate asymptotic_embeddings_equal(std::int64_t n) {
  if (n < 1) throw std::domain_error("asymptotic_embeddings_equal requires n >= 1");
  const double phi = kGoldenRatio;
  const double ln = std::log(phi * phi * std::sqrt(5.0) / (2 * M_PI)) +
                    2 * n * std::log(phi) - std::log(double(n));
  return AsymptoticEstimate::from_ln(ln);
}

/// Maximum embeddings of one LCS of length l at total input length t.
inline BigInt max_embeddings_total(std::int64_t t, std::int64_t l) {
  if (l < 0 || 2 * l > t) throw std::domain_error("max_embeddings_total requires 0 <= 2l <= t");
  return binomial(t - l, l);
}

/// Closed form for max over l of C(t-l, l).
inline BigInt max_embeddings_total_opt(std::int64_t t) {
  if (t < 0) throw std::domain_error("max_embeddings_total_opt requires t >= 0");
  const std::int64_t d = 5 * (t + 1) * (t + 1) + 4;
  const std::int64_t r = detail::floor_add_sqrt_div10(5 * t + 3, d);
  const std::int64_t k = detail::ceil_sub_sqrt_div10(5 * t - 3, d);
  return binomial(r, k);
}

/// Limit form phi sqrt(sqrt(5)/(2 pi)) * phi^t / sqrt(t), in log space.
inline AsymptoticEstimate asymptotic_embeddings_total(std::int64_t t) {
  if (t < 1) throw std::domain_error("asymptotic_embeddings_total requires t >= 1");
  const double phi = kGoldenRatio;
  const double ln = std::log(phi) + 0.5 * std::log(std::sqrt(5.0) / (2 * M_PI)) +
                    t * std::log(phi) - 0.5 * std::log(double(t));
  return AsymptoticEstimate::from_ln(ln);
}

/// Worst-case factor by which the naive backtrace exceeds the output size.
inline BigInt naive_overhead_bound(std::int64_t m, std::int64_t n) {
  if (m < 0 || n < 0) throw std::domain_error("naive_overhead_bound requires m, n >= 0");
  return binomial(m + n, m);
}

struct OverheadEstimate {
  BigInt exact;
  AsymptoticEstimate asymptotic;
};

/// C(2n, n) with its 4^n / sqrt(pi n) Stirling form.
inline OverheadEstimate naive_overhead_equal(std::int64_t n) {
  if (n < 1) throw std::domain_error("naive_overhead_equal requires n >= 1");
  const double ln = n * std::log(4.0) - 0.5 * std::log(M_PI * n);
  return {binomial(2 * n, n), AsymptoticEstimate::from_ln(ln)};
}

/// C(t, ceil(t/2)) with its 2^t sqrt(2/(pi t)) Stirling form.
inline OverheadEstimate naive_overhead_total(std::int64_t t) {
  if (t < 1) throw std::domain_error("naive_overhead_total requires t >= 1");
  const double ln = t * std::log(2.0) + 0.5 * std::log(2.0 / (M_PI * t));
  return {binomial(t, (t + 1) / 2), AsymptoticEstimate::from_ln(ln)};
}

/// ln sqrt(2 pi n) + n ln(n/e); relative error O(1/n) against ln(n!).
inline double ln_factorial_stirling(std::int64_t n) {
  if (n < 1) throw std::domain_error("ln_factorial_stirling requires n >= 1");
  return 0.5 * std::log(2 * M_PI * n) + n * (std::log(double(n)) - 1.0);
}

}  // namespace lcsb

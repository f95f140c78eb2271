#ifndef MPJCM_NUMERICS_HPP
#define MPJCM_NUMERICS_HPP

#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

namespace mpjcm {

using Complex = std::complex<double>;

// Tail-mass tolerance used by every truncation check unless overridden
// (the CLI honours the JCM_DEFAULT_TOL environment variable).
inline constexpr double kDefaultTailTolerance = 1e-12;

// Table of ln(m!). Built once, read-only afterwards; safe to share across
// threads.
class LogFactorialTable {
 public:
  explicit LogFactorialTable(std::size_t max_m) : values_(max_m + 1) {
    values_[0] = 0.0;
    for (std::size_t m = 1; m <= max_m; ++m)
      values_[m] = values_[m - 1] + std::log(static_cast<double>(m));
  }

  double operator()(std::size_t m) const {
    assert(m < values_.size());
    return values_[m];
  }

  std::size_t max_m() const { return values_.size() - 1; }

 private:
  std::vector<double> values_;
};

inline double log_factorial(int m) {
  assert(m >= 0);
  return std::lgamma(static_cast<double>(m) + 1.0);
}

// Physicists' Hermite polynomial H_n(z), full complex arithmetic.
// H_{n+1}(z) = 2 z H_n(z) - 2 n H_{n-1}(z)
inline Complex hermite(int n, Complex z) {
  assert(n >= 0);
  Complex p0{1.0, 0.0};
  if (n == 0) return p0;
  Complex p1 = 2.0 * z;
  for (int c = 1; c < n; ++c) {
    Complex next = 2.0 * z * p1 - 2.0 * static_cast<double>(c) * p0;
    p0 = p1;
    p1 = next;
  }
  return p1;
}

// Generalized Laguerre L_n^{(a)}(x) by upward recurrence in n.
// (n+1) L_{n+1}^{(a)} = (2n+1+a-x) L_n^{(a)} - (n+a) L_{n-1}^{(a)}
inline double assoc_laguerre(int n, int a, double x) {
  assert(n >= 0 && a >= 0);
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = 1.0 + static_cast<double>(a) - x;
  for (int c = 1; c < n; ++c) {
    double next = ((2.0 * c + 1.0 + a - x) * p1 - (c + static_cast<double>(a)) * p0) /
                  (c + 1.0);
    p0 = p1;
    p1 = next;
  }
  return p1;
}

inline double laguerre(int n, double x) { return assoc_laguerre(n, 0, x); }

// sqrt(h(m,k)) with h(m,k) = (m+k)!/m!, the k-photon Rabi frequency factor.
// Exact products below m+k = 20, log-gamma above.
inline double sqrt_h(int m, int k) {
  assert(m >= 0 && k >= 1);
  if (m + k < 20) {
    double prod = 1.0;
    for (int j = m + 1; j <= m + k; ++j) prod *= static_cast<double>(j);
    return std::sqrt(prod);
  }
  return std::exp(0.5 * (log_factorial(m + k) - log_factorial(m)));
}

namespace detail {

// cos/sin after range reduction, with components on the axes snapped exact.
// Phases accumulated from half-integer multiples of pi (parity signs, square
// roots of negative reals, i^n factors) must come back as exact signs, or
// cancellations between real terms leave sin(pi)-sized residue.
inline std::pair<double, double> reduced_cos_sin(double phase) {
  const double reduced = std::remainder(phase, 2.0 * std::numbers::pi_v<double>);
  double c = std::cos(reduced);
  double s = std::sin(reduced);
  const double snap = 4e-16 * std::max(1.0, std::abs(phase));
  if (std::abs(c) < snap) c = 0.0;
  if (std::abs(s) < snap) s = 0.0;
  if (std::abs(c - 1.0) < snap) c = 1.0;
  if (std::abs(c + 1.0) < snap) c = -1.0;
  if (std::abs(s - 1.0) < snap) s = 1.0;
  if (std::abs(s + 1.0) < snap) s = -1.0;
  return {c, s};
}

}  // namespace detail

// A nonzero complex number stored as (log magnitude, phase). Exact zeros are
// representable as log_mag = -inf. Used wherever Eq-level factors overflow
// double precision individually but not in product.
struct LogPolar {
  double log_mag = -std::numeric_limits<double>::infinity();
  double phase = 0.0;

  static LogPolar from(Complex z) {
    double a = std::abs(z);
    if (a == 0.0) return {};
    return {std::log(a), std::arg(z)};
  }

  static LogPolar from_real(double x) {
    if (x == 0.0) return {};
    return {std::log(std::abs(x)), x < 0.0 ? std::numbers::pi_v<double> : 0.0};
  }

  bool is_zero() const { return !(log_mag > -std::numeric_limits<double>::infinity()); }

  Complex value() const {
    if (is_zero()) return {0.0, 0.0};
    const double mag = std::exp(log_mag);
    const auto [c, s] = detail::reduced_cos_sin(phase);
    return {mag * c, mag * s};
  }

  LogPolar operator*(const LogPolar& o) const {
    if (is_zero() || o.is_zero()) return {};
    return {log_mag + o.log_mag, phase + o.phase};
  }

  // Principal-branch power: (e^{L+i*phi})^t = e^{tL + i*t*phi}. Valid while
  // |phase| <= pi, which holds for values built via from()/from_real().
  LogPolar pow(double t) const {
    if (is_zero()) return {};
    return {log_mag * t, phase * t};
  }
};

// Sum of log-polar terms: the largest magnitude is factored out so the
// residual sum stays in range.
inline LogPolar logpolar_sum(std::span<const LogPolar> terms) {
  double lead = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) lead = std::max(lead, t.log_mag);
  if (!(lead > -std::numeric_limits<double>::infinity())) return {};
  Complex acc{0.0, 0.0};
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    const double mag = std::exp(t.log_mag - lead);
    const auto [c, s] = detail::reduced_cos_sin(t.phase);
    acc += Complex{mag * c, mag * s};
  }
  if (acc == Complex{0.0, 0.0}) return {};
  return {lead + std::log(std::abs(acc)), std::arg(acc)};
}

// H_0(z) .. H_max_n(z) in log-polar form. The recurrence runs on rescaled
// complex values with the accumulated scale kept separately; H_n grows like
// n!, which overflows double well before n = 500 for the arguments used by
// the coefficient series.
inline std::vector<LogPolar> hermite_sequence_logpolar(int max_n, Complex z) {
  assert(max_n >= 0);
  std::vector<LogPolar> out(static_cast<std::size_t>(max_n) + 1);
  double log_scale = 0.0;
  Complex p0{1.0, 0.0};
  Complex p1 = 2.0 * z;
  out[0] = LogPolar::from(p0);
  if (max_n == 0) return out;
  out[1] = LogPolar::from(p1);
  for (int c = 1; c < max_n; ++c) {
    Complex next = 2.0 * z * p1 - 2.0 * static_cast<double>(c) * p0;
    p0 = p1;
    p1 = next;
    double big = std::max(std::abs(p0), std::abs(p1));
    if (big > 1e120) {
      p0 /= big;
      p1 /= big;
      log_scale += std::log(big);
    }
    LogPolar lp = LogPolar::from(p1);
    if (!lp.is_zero()) lp.log_mag += log_scale;
    out[static_cast<std::size_t>(c) + 1] = lp;
  }
  return out;
}

}  // namespace mpjcm

#endif  // MPJCM_NUMERICS_HPP

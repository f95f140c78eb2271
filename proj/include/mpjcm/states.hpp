#ifndef MPJCM_STATES_HPP
#define MPJCM_STATES_HPP

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "mpjcm/errors.hpp"
#include "mpjcm/numerics.hpp"

namespace mpjcm {

using Eigen::Index;

// Parameter tuple of the superposed squeezed displaced number state
//   lambda * [D(alpha) + eps * D(-alpha)] S(r) |n>
// with eps = eps_mod * exp(i * eps_phase). The displacement amplitude is
// real; complex alpha is only supported through the operator construction
// in fock.hpp.
struct SuperpositionParams {
  double alpha = 0.0;
  double r = 0.0;
  int n = 0;
  double eps_mod = 0.0;
  double eps_phase = 0.0;

  // Components below rounding noise are snapped to zero so the named
  // regimes eps = 0, 1, -1, i come out exact (the parity factor must kill
  // coefficients exactly, not to 1e-16).
  Complex eps() const {
    double c = std::cos(eps_phase);
    double s = std::sin(eps_phase);
    if (std::abs(c) < 4e-16) c = 0.0;
    if (std::abs(s) < 4e-16) s = 0.0;
    return {eps_mod * c, eps_mod * s};
  }

  static SuperpositionParams with_eps(double alpha, double r, int n, Complex eps) {
    return {alpha, r, n, std::abs(eps), std::arg(eps)};
  }

  // beta = alpha cosh r + alpha* sinh r, real alpha.
  double beta() const { return alpha * std::exp(r); }
};

// Below this squeeze magnitude the coefficient series is evaluated in its
// r -> 0 limit (displaced-number matrix elements); tanh r and sinh 2r are
// otherwise denominators.
inline constexpr double kSqueezeLimitThreshold = 1e-6;
inline constexpr double kDisplacementLimitThreshold = 1e-12;

namespace detail {

// <m|D(alpha)|n> for real alpha, in log-polar form (phase is 0 or pi).
//   m >= n:  sqrt(n!/m!) alpha^{m-n} e^{-alpha^2/2} L_n^{(m-n)}(alpha^2)
//   m <  n:  sqrt(m!/n!) (-alpha)^{n-m} e^{-alpha^2/2} L_m^{(n-m)}(alpha^2)
inline LogPolar displaced_number_logelem(int m, int n, double alpha) {
  if (alpha == 0.0) {
    return m == n ? LogPolar::from_real(1.0) : LogPolar{};
  }
  const int lo = std::min(m, n);
  const int hi = std::max(m, n);
  const int d = hi - lo;
  const double x = alpha * alpha;
  const double lag = assoc_laguerre(lo, d, x);
  const double base = (m >= n) ? alpha : -alpha;
  int sign = (base < 0.0 && (d % 2)) ? -1 : 1;
  if (lag < 0.0) sign = -sign;
  if (lag == 0.0) return {};
  LogPolar out;
  out.log_mag = 0.5 * (log_factorial(lo) - log_factorial(hi)) +
                d * std::log(std::abs(base)) - 0.5 * x + std::log(std::abs(lag));
  out.phase = sign < 0 ? std::numbers::pi_v<double> : 0.0;
  return out;
}

inline Complex parity_factor(int n, int m, Complex eps) {
  return ((n + m) % 2) ? Complex{1.0, 0.0} - eps : Complex{1.0, 0.0} + eps;
}

}  // namespace detail

// Normalization lambda with the convention lambda^{-2} = 1 + |eps|^2
// + 2|eps| exp(-2 beta^2) L_n(4 beta^2) cos(phase), the power that makes the
// coefficient vector sum to unit probability. The overlap factor is the
// diagonal displacement element <n|D(2 beta)|n>, evaluated in log space so
// large beta never overflows.
inline double normalization(const SuperpositionParams& p) {
  const double beta = p.beta();
  const double overlap = detail::displaced_number_logelem(p.n, p.n, 2.0 * beta)
                             .value()
                             .real();
  const double bracket = 1.0 + p.eps_mod * p.eps_mod +
                         2.0 * p.eps_mod * overlap * std::cos(p.eps_phase);
  if (bracket <= 1e-14)
    throw DegenerateStateError("superposition norm vanishes (bracket = " +
                               std::to_string(bracket) + ")");
  return 1.0 / std::sqrt(bracket);
}

namespace detail {

// Coefficient series on the generic branch |r| >= threshold: every factor is
// combined in log-polar form and exponentiated once at the end, so the
// alpha = 16, m ~ 450 regime stays finite. The half-odd powers of tanh r are
// evaluated on the branch consistent with the Hermite arguments
// i alpha / sqrt(sinh 2r) and e^r alpha / sqrt(sinh 2r) (principal square
// root of sinh 2r throughout); for r < 0 this differs from the literal
// principal power by a sign alternating with n - j, and the operator oracle
// settles it in favour of the consistent branch.
inline Eigen::VectorXcd coefficients_generic(const SuperpositionParams& p,
                                             Index dim, double lambda) {
  const int n = p.n;
  const double alpha = std::abs(p.alpha) < kDisplacementLimitThreshold ? 0.0 : p.alpha;
  const double th = std::tanh(p.r);
  const double ch = std::cosh(p.r);
  const double s2r = std::sinh(2.0 * p.r);
  const Complex root_s2r = std::sqrt(Complex(s2r, 0.0));
  const Complex w = 1.0 / root_s2r;
  const Complex z1 = Complex(0.0, 1.0) * alpha * w;
  const Complex z2 = std::exp(p.r) * alpha * w;

  const auto h1 = hermite_sequence_logpolar(n, z1);
  const auto h2 = hermite_sequence_logpolar(static_cast<int>(dim) - 1, z2);
  const LogFactorialTable lf(static_cast<std::size_t>(std::max<Index>(dim, n + 1)));

  const LogPolar tanh_half = LogPolar::from_real(0.5 * th);
  // sqrt(-tanh r / 2) on the z1-consistent branch: i sqrt(sinh 2r) / (2 cosh r).
  const LogPolar root_neg_tanh_half =
      LogPolar::from(Complex(0.0, 1.0) * root_s2r / (2.0 * ch));
  const LogPolar two_w = LogPolar::from(2.0 * w);
  const double expo = 0.5 * alpha * alpha * std::exp(2.0 * p.r) * (th - 1.0);
  const double log_cosh = std::log(ch);
  const Complex eps = p.eps();

  Eigen::VectorXcd c(dim);
  std::vector<LogPolar> terms;
  for (Index m = 0; m < dim; ++m) {
    LogPolar pref = tanh_half.pow(0.5 * static_cast<double>(m));
    pref.log_mag += -0.5 * (lf(n) + lf(m)) - 0.5 * log_cosh + expo;

    const int jmax = std::min<int>(static_cast<int>(m), n);
    terms.clear();
    for (int j = 0; j <= jmax; ++j) {
      LogPolar t;
      t.log_mag = lf(n) + lf(m) - lf(j) - lf(n - j) - lf(m - j);
      t.phase = 0.0;
      t = t * two_w.pow(j) * root_neg_tanh_half.pow(n - j) *
          h1[static_cast<std::size_t>(n - j)] * h2[static_cast<std::size_t>(m - j)];
      terms.push_back(t);
    }
    const LogPolar sum = logpolar_sum(terms);
    c[m] = (pref * sum).value() * lambda * parity_factor(n, static_cast<int>(m), eps);
  }
  return c;
}

// r -> 0 limit: the squeeze is the identity and the state reduces to a
// superposition of displaced number states.
inline Eigen::VectorXcd coefficients_displaced(const SuperpositionParams& p,
                                               Index dim, double lambda) {
  const Complex eps = p.eps();
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
  if (std::abs(p.alpha) < kDisplacementLimitThreshold) {
    if (p.n >= dim) throw TruncationError(1.0, kDefaultTailTolerance, static_cast<std::size_t>(dim));
    c[p.n] = lambda * (Complex{1.0, 0.0} + eps);
    return c;
  }
  for (Index m = 0; m < dim; ++m) {
    const Complex d = displaced_number_logelem(static_cast<int>(m), p.n, p.alpha).value();
    c[m] = lambda * parity_factor(p.n, static_cast<int>(m), eps) * d;
  }
  return c;
}

}  // namespace detail

// Fock coefficients C_0 .. C_{dim-1} of the normalized superposition state.
// Throws DegenerateStateError when the superposition vanishes identically.
inline Eigen::VectorXcd coefficients(const SuperpositionParams& p, Index dim) {
  const double lambda = normalization(p);
  if (std::abs(p.r) < kSqueezeLimitThreshold)
    return detail::coefficients_displaced(p, dim, lambda);
  return detail::coefficients_generic(p, dim, lambda);
}

inline Complex coefficient(int m, const SuperpositionParams& p) {
  const Index dim = static_cast<Index>(std::max(m, p.n)) + 1;
  return coefficients(p, dim)[m];
}

// Probability mass sitting in the top 5% of the truncated space. At least
// two entries are always counted so a parity-forced zero in the top slot
// cannot mask a populated tail.
inline double tail_mass(const Eigen::VectorXd& probs) {
  const Index dim = probs.size();
  const Index count = std::min(dim, std::max<Index>(2, dim / 20));
  return probs.tail(count).sum();
}

inline double tail_mass(const Eigen::VectorXcd& amps) {
  const Index dim = amps.size();
  const Index count = std::min(dim, std::max<Index>(2, dim / 20));
  return amps.tail(count).squaredNorm();
}

// P(m) = |C_m|^2. Fails with TruncationError when the tail check shows the
// requested dimension clips the state.
inline Eigen::VectorXd photon_distribution(const SuperpositionParams& p, Index dim,
                                           double tol = kDefaultTailTolerance) {
  const Eigen::VectorXd probs = coefficients(p, dim).cwiseAbs2();
  const double tail = tail_mass(probs);
  if (tail >= tol) throw TruncationError(tail, tol, static_cast<std::size_t>(dim));
  return probs;
}

inline double mean_photon(const SuperpositionParams& p, Index dim,
                          double tol = kDefaultTailTolerance) {
  const Eigen::VectorXd probs = photon_distribution(p, dim, tol);
  double mean = 0.0;
  for (Index m = 0; m < probs.size(); ++m) mean += static_cast<double>(m) * probs[m];
  return mean;
}

// Truncation heuristic: mean photon number plus ten standard deviations,
// with headroom for the k-photon exchange. Callers double on TruncationError.
inline Index suggest_dim(const SuperpositionParams& p, int k = 1) {
  const double beta = std::abs(p.beta());
  const double est = beta * beta + 10.0 * beta +
                     p.n * std::exp(2.0 * std::abs(p.r)) + k + 20.0;
  return static_cast<Index>(std::ceil(est));
}

// Heuristic dimension, doubled until the coefficient tail passes the
// tolerance. Negative r needs the doubling path routinely: beta = alpha e^r
// understates the spread along the anti-squeezed quadrature.
inline Index checked_dim(const SuperpositionParams& p, int k = 1,
                         double tol = kDefaultTailTolerance) {
  Index dim = suggest_dim(p, k);
  for (int attempt = 0; attempt < 4; ++attempt) {
    if (tail_mass(coefficients(p, dim)) < tol) return dim;
    dim *= 2;
  }
  throw TruncationError(tail_mass(coefficients(p, dim)), tol,
                        static_cast<std::size_t>(dim));
}

}  // namespace mpjcm

#endif  // MPJCM_STATES_HPP

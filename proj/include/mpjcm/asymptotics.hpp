#ifndef MPJCM_ASYMPTOTICS_HPP
#define MPJCM_ASYMPTOTICS_HPP

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mpjcm/errors.hpp"
#include "mpjcm/numerics.hpp"

namespace mpjcm {

// Linearization of the Rabi frequency around the mean photon number:
// sqrt(n+1) ~ (eta1 + eta2 n)/2. The two-photon map uses the fixed pair
// (3, 2), which makes every derived time scale intensity independent.
struct HarmonicApproxParams {
  double eta1 = 0.0;
  double eta2 = 0.0;
  double mean_n = 0.0;
};

inline HarmonicApproxParams harmonic_params(double mean_n) {
  if (mean_n <= 0.0)
    throw std::invalid_argument("harmonic_params: mean photon number must be > 0");
  const double root = std::sqrt(mean_n);
  return {root + 1.0 / root, 1.0 / root, mean_n};
}

inline HarmonicApproxParams two_photon_params() { return {3.0, 2.0, 0.0}; }

// Envelope of the statistical-mixture part (single-photon Fock admixture).
inline double envelope_f1(double T, double alpha, const HarmonicApproxParams& eta) {
  const double s = std::sin(0.5 * eta.eta2 * T);
  const double s2 = s * s;
  return (1.0 - 4.0 * alpha * alpha * s2) * std::exp(-2.0 * alpha * alpha * s2);
}

// Envelope of the interference part.
inline double envelope_f2(double T, double alpha, const HarmonicApproxParams& eta) {
  const double c = std::cos(0.5 * eta.eta2 * T);
  const double c2 = c * c;
  return (1.0 - 4.0 * alpha * alpha * c2) * std::exp(-2.0 * alpha * alpha * c2);
}

// Harmonic-approximation atomic inversion, derived for the strong-field
// single-photon regime (k = 1, n = 1, r = 0). The normalization enters
// squared so the T = 0 value is exactly one; the same bracket as the state
// normalization appears because f2(0) equals exp(-2 alpha^2) L_1(4 alpha^2).
inline double inversion_asymptotic(double T, double alpha, Complex eps,
                                   const HarmonicApproxParams& eta) {
  const double mod = std::abs(eps);
  const double cphi = mod > 0.0 ? std::cos(std::arg(eps)) : 1.0;
  const double lambda_sq =
      1.0 / (1.0 + mod * mod + 2.0 * mod * cphi * envelope_f2(0.0, alpha, eta));
  const double drift = T * (eta.eta1 + eta.eta2);
  const double swing = alpha * alpha * std::sin(eta.eta2 * T);
  return lambda_sq *
         ((1.0 + mod * mod) * envelope_f1(T, alpha, eta) * std::cos(drift + swing) +
          2.0 * mod * envelope_f2(T, alpha, eta) * cphi * std::cos(drift - swing));
}

// Times in [0, 2 pi / eta2) where the mixture envelope changes sign, i.e.
// where the main revival splits into echoes. Two solutions for n = 1
// (sin(eta2 T / 2) = 1/(2 alpha)), four for n = 2 (roots of
// 8 a^4 s^4 - 8 a^2 s^2 + 1 = 0 in s^2).
inline std::vector<double> envelope_split_times(double alpha, int n,
                                                const HarmonicApproxParams& eta) {
  const double a2 = alpha * alpha;
  std::vector<double> out;
  if (n == 1) {
    const double s = 1.0 / (2.0 * std::abs(alpha));
    if (s > 1.0) throw NoRootError("no envelope splitting for |alpha| <= 1/2");
    const double u = std::asin(s);
    out = {2.0 * u / eta.eta2, 2.0 * (std::numbers::pi_v<double> - u) / eta.eta2};
  } else if (n == 2) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2_v<double>;
    for (double root : {(1.0 - inv_sqrt2) / (2.0 * a2), (1.0 + inv_sqrt2) / (2.0 * a2)}) {
      if (root < 0.0 || root > 1.0)
        throw NoRootError("splitting quartic has no real angle solution");
      const double u = std::asin(std::sqrt(root));
      out.push_back(2.0 * u / eta.eta2);
      out.push_back(2.0 * (std::numbers::pi_v<double> - u) / eta.eta2);
    }
    std::sort(out.begin(), out.end());
  } else {
    throw std::invalid_argument("envelope_split_times: n must be 1 or 2");
  }
  return out;
}

// (T_R^(S), T_R^(I)) = (2 pi sqrt(mean_n), pi sqrt(mean_n)).
inline std::pair<double, double> revival_times(double mean_n) {
  if (mean_n <= 0.0)
    throw std::invalid_argument("revival_times: mean photon number must be > 0");
  const double root = std::sqrt(mean_n);
  return {2.0 * std::numbers::pi_v<double> * root, std::numbers::pi_v<double> * root};
}

// C_{m-2}/C_m for the displaced one-photon state (n = 1, r = 0):
//   sqrt(m^2/a^4 - m/a^4) * (m - a^2 - 2)/(m - a^2)
inline double quarter_revival_ratio(int m, double alpha) {
  if (m < 2) throw std::invalid_argument("quarter_revival_ratio: m must be >= 2");
  const double a2 = alpha * alpha;
  if (std::abs(static_cast<double>(m) - a2) < 1e-9)
    throw PoleError("quarter_revival_ratio: m coincides with alpha^2");
  const double a4 = a2 * a2;
  const double md = static_cast<double>(m);
  return std::sqrt(md * md / a4 - md / a4) * (md - a2 - 2.0) / (md - a2);
}

struct AtomSuperposition {
  Complex excited;
  Complex ground;
};

struct QuarterRevivalState {
  Eigen::VectorXcd field;
  AtomSuperposition atom;
};

// Asymptotically factorized state at a quarter of the two-photon revival
// time: the atom sits in (|+> + i|->)/sqrt(2) while the field coefficients
// are cosine-modulated and renormalized.
inline QuarterRevivalState quarter_revival_state(const Eigen::VectorXcd& c) {
  const double quarter = std::numbers::pi_v<double> / 4.0;
  Eigen::VectorXcd field(c.size());
  for (Eigen::Index m = 0; m < c.size(); ++m)
    field[m] = c[m] * std::cos(quarter * (static_cast<double>(m) + 1.5));
  field.normalize();
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2_v<double>;
  return {field, {Complex(inv_sqrt2, 0.0), Complex(0.0, inv_sqrt2)}};
}

}  // namespace mpjcm

#endif  // MPJCM_ASYMPTOTICS_HPP

#ifndef MPJCM_WIGNER_HPP
#define MPJCM_WIGNER_HPP

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "mpjcm/asymptotics.hpp"
#include "mpjcm/dynamics.hpp"
#include "mpjcm/errors.hpp"
#include "mpjcm/numerics.hpp"
#include "mpjcm/parallel.hpp"

namespace mpjcm {

// W(x, p) samples on a rectangular phase-space grid; values(ix, ip)
// corresponds to (x_axis[ix], p_axis[ip]).
struct WignerGrid {
  Eigen::VectorXd x_axis;
  Eigen::VectorXd p_axis;
  Eigen::MatrixXd values;
  double T = 0.0;
};

namespace detail {

// Scaled off-diagonal Fock kernel
//   Hhat_b^{(d)} = e^{-|chi|^2} (sqrt(2)|chi|)^d sqrt(b!/(b+d)!) L_b^{(d)}(2|chi|^2),
// a displacement matrix element in disguise, so |Hhat| <= 1 for every (b, d)
// and the three-term recurrence below never leaves double range.
//
// Recurrence: Hhat_{b+1} = [(2b+1+d-y) Hhat_b - sqrt(b(b+d)) Hhat_{b-1}]
//                          / sqrt((b+1)(b+1+d)),  y = 2|chi|^2.
struct ScaledLaguerreKernel {
  double y;
  int d;
  double h_prev = 0.0;
  double h_cur;
  int b = 0;

  ScaledLaguerreKernel(double abs_chi_sq, int d_in)
      : y(2.0 * abs_chi_sq), d(d_in) {
    if (d == 0) {
      h_cur = std::exp(-abs_chi_sq);
    } else {
      const double sq2chi = std::sqrt(2.0 * abs_chi_sq);
      if (sq2chi == 0.0) {
        h_cur = 0.0;
      } else {
        const double log_h0 =
            -abs_chi_sq + d * std::log(sq2chi) - 0.5 * log_factorial(d);
        h_cur = log_h0 < -745.0 ? 0.0 : std::exp(log_h0);
      }
    }
  }

  double value() const { return h_cur; }

  void advance() {
    const double bd = static_cast<double>(b);
    const double next = ((2.0 * bd + 1.0 + d - y) * h_cur -
                         std::sqrt(bd * (bd + d)) * h_prev) /
                        std::sqrt((bd + 1.0) * (bd + 1.0 + d));
    h_prev = h_cur;
    h_cur = next;
    ++b;
  }
};

}  // namespace detail

// Exact series evaluation of the Wigner function at (x, p) from the field
// density matrix, with chi = x + i p. Terms with m < m' are folded in by
// conjugate symmetry (2 Re of the m >= m' half), the reading that keeps the
// sum Hermitian; the quadrature oracle pins this choice. Cost O(dim^2).
inline double wigner_point(const FieldDensityMatrix& rho, double x, double p) {
  const Eigen::Index dim = rho.rows();
  const double abs_chi_sq = x * x + p * p;
  const double theta = (abs_chi_sq == 0.0) ? 0.0 : std::atan2(p, x);

  double acc = 0.0;
  {
    detail::ScaledLaguerreKernel kern(abs_chi_sq, 0);
    double sign = 1.0;
    for (Eigen::Index b = 0; b < dim; ++b) {
      acc += sign * rho(b, b).real() * kern.value();
      kern.advance();
      sign = -sign;
    }
  }
  for (int d = 1; d < static_cast<int>(dim); ++d) {
    detail::ScaledLaguerreKernel kern(abs_chi_sq, d);
    if (kern.value() == 0.0 && static_cast<double>(d) > 2.0 * abs_chi_sq) break;
    Complex partial{0.0, 0.0};
    double sign = 1.0;
    for (Eigen::Index b = 0; b + d < dim; ++b) {
      partial += sign * rho(b + d, b) * kern.value();
      kern.advance();
      sign = -sign;
    }
    acc += 2.0 * (std::polar(1.0, -d * theta) * partial).real();
  }
  return acc / std::numbers::pi_v<double>;
}

inline double wigner_point(const JointState& psi, double x, double p) {
  return wigner_point(reduced_field_dm(psi), x, p);
}

// W(0, T) from the diagonal alone:
//   (1/pi) sum_m (-1)^m P(m) [cos^2(T sqrt(h(m,k))) + (-1)^k sin^2(...)].
// Odd k reduces to (1/pi) sum (-1)^m P(m) cos(2 T sqrt(h(m,k))), which for a
// fixed-parity state is the atomic inversion over pi up to the parity sign;
// even k recombines the branches and freezes the origin at its T = 0 value.
inline double wigner_origin_series(const Eigen::VectorXd& probs, ModelParams model,
                                   double T) {
  const bool odd_k = model.k % 2;
  double acc = 0.0;
  double sign = 1.0;
  for (Eigen::Index m = 0; m < probs.size(); ++m) {
    acc += sign * probs[m] *
           (odd_k ? std::cos(2.0 * T * sqrt_h(static_cast<int>(m), model.k)) : 1.0);
    sign = -sign;
  }
  return acc / std::numbers::pi_v<double>;
}

namespace detail {

// Normalized harmonic-oscillator wavefunctions <x|0..max_n> by the stable
// recurrence psi_n = sqrt(2/n) x psi_{n-1} - sqrt((n-1)/n) psi_{n-2}.
inline Eigen::VectorXd fock_wavefunctions(int max_n, double x) {
  Eigen::VectorXd out(max_n + 1);
  out[0] = std::pow(std::numbers::pi_v<double>, -0.25) * std::exp(-0.5 * x * x);
  if (max_n == 0) return out;
  out[1] = std::numbers::sqrt2_v<double> * x * out[0];
  for (int n = 2; n <= max_n; ++n)
    out[n] = std::sqrt(2.0 / n) * x * out[n - 1] -
             std::sqrt((n - 1.0) / n) * out[n - 2];
  return out;
}

template <typename Fn>
Complex adaptive_simpson(const Fn& f, double a, double b, Complex fa, Complex fb,
                         Complex fm, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const Complex flm = f(lm);
  const Complex frm = f(rm);
  const Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const Complex delta = left + right - whole;
  if (depth <= 0) throw QuadratureError("adaptive quadrature recursion exhausted");
  if (std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, fm, flm, 0.5 * eps, depth - 1) +
         adaptive_simpson(f, m, b, fm, fb, frm, 0.5 * eps, depth - 1);
}

}  // namespace detail

// Independent quadrature oracle: W(x,p) as the Fourier transform of the
// position-space coherence <x + z/2| rho |x - z/2> built from explicit Fock
// wavefunctions. Small instances only; validates both the series and the
// phase-space scaling convention (a coherent state peaks at sqrt(2) alpha).
inline double wigner_integral_oracle(const JointState& psi, double x, double p,
                                     double tol = 1e-8) {
  const Eigen::Index dim = psi.dim();
  if (dim > 40)
    throw std::invalid_argument("wigner_integral_oracle: dim must be <= 40");
  const FieldDensityMatrix rho = reduced_field_dm(psi);
  const int max_n = static_cast<int>(dim) - 1;
  const double limit = 2.0 * (std::sqrt(static_cast<double>(dim)) + 6.0);

  const auto integrand = [&](double zeta) -> Complex {
    const Eigen::VectorXcd up =
        detail::fock_wavefunctions(max_n, x + 0.5 * zeta).cast<Complex>();
    const Eigen::VectorXcd um =
        detail::fock_wavefunctions(max_n, x - 0.5 * zeta).cast<Complex>();
    const Complex coherence = up.transpose() * rho * um;
    return std::polar(1.0, -p * zeta) * coherence;
  };

  if (std::abs(integrand(limit)) > 1e-10 || std::abs(integrand(-limit)) > 1e-10)
    throw QuadratureError("integrand has not decayed at the integration boundary");

  // Pre-split into panels so the oscillations in zeta are resolved before
  // the adaptive refinement starts.
  const int panels = 512;
  const double width = 2.0 * limit / panels;
  Complex total{0.0, 0.0};
  Complex f_left = integrand(-limit);
  for (int i = 0; i < panels; ++i) {
    const double a = -limit + i * width;
    const double b = a + width;
    const Complex f_right = integrand(b);
    const Complex f_mid = integrand(0.5 * (a + b));
    total += detail::adaptive_simpson(integrand, a, b, f_left, f_right, f_mid,
                                      tol / panels, 40);
    f_left = f_right;
  }
  return total.real() / (2.0 * std::numbers::pi_v<double>);
}

inline WignerGrid wigner_grid(const JointState& psi, double x_min, double x_max,
                              double p_min, double p_max, Eigen::Index nx,
                              Eigen::Index np, unsigned threads = 1) {
  if (nx < 2 || np < 2) throw std::invalid_argument("wigner_grid: need >= 2 points per axis");
  const FieldDensityMatrix rho = reduced_field_dm(psi);
  WignerGrid grid;
  grid.x_axis = Eigen::VectorXd::LinSpaced(nx, x_min, x_max);
  grid.p_axis = Eigen::VectorXd::LinSpaced(np, p_min, p_max);
  grid.values.resize(nx, np);
  parallel_for_index(static_cast<std::size_t>(nx), threads, [&](std::size_t ix) {
    for (Eigen::Index ip = 0; ip < np; ++ip)
      grid.values(static_cast<Eigen::Index>(ix), ip) =
          wigner_point(rho, grid.x_axis[static_cast<Eigen::Index>(ix)], grid.p_axis[ip]);
  });
  return grid;
}

// Closed-form cat-state Wigner function in the harmonic approximation of the
// standard one-photon model (k = 1, eps = n = r = 0, strong field): two
// counter-rotating Gaussians on the circle of radius sqrt(2) alpha with an
// interference fringe term between them. Kept with its literal 1/(2 pi)
// prefactor; the asymptotic form is not renormalized to the grid measure.
inline double cat_wigner_asymptotic(double x, double p, double T, double alpha,
                                    const HarmonicApproxParams& eta) {
  const double half_angle = 0.5 * eta.eta2 * T;
  const double e1 = std::numbers::sqrt2_v<double> * alpha * std::cos(half_angle);
  const double e2 = std::numbers::sqrt2_v<double> * alpha * std::sin(half_angle);
  const double dx = x - e1;
  const double fringe_phase =
      T * (eta.eta1 - 0.5 * eta.eta2) +
      2.0 * alpha * (std::numbers::sqrt2_v<double> * x - alpha * std::cos(half_angle)) *
          std::sin(half_angle);
  const double bracket = std::exp(-(p - e2) * (p - e2)) +
                         std::exp(-(p + e2) * (p + e2)) -
                         2.0 * std::exp(-p * p) * std::sin(half_angle) *
                             std::sin(fringe_phase);
  return std::exp(-dx * dx) * bracket / (2.0 * std::numbers::pi_v<double>);
}

}  // namespace mpjcm

#endif  // MPJCM_WIGNER_HPP

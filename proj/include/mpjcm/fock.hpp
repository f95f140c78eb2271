#ifndef MPJCM_FOCK_HPP
#define MPJCM_FOCK_HPP

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "mpjcm/dynamics.hpp"
#include "mpjcm/errors.hpp"
#include "mpjcm/numerics.hpp"
#include "mpjcm/states.hpp"

namespace mpjcm {

using FockOperator = Eigen::MatrixXcd;

// Normalized field state on a truncated Fock basis together with the
// probability mass found in its top 5% of levels.
struct FieldState {
  Eigen::VectorXcd amps;
  double tail_mass = 0.0;

  Eigen::Index dim() const { return amps.size(); }
};

inline FockOperator annihilation(Eigen::Index dim) {
  FockOperator a = FockOperator::Zero(dim, dim);
  for (Eigen::Index m = 1; m < dim; ++m)
    a(m - 1, m) = std::sqrt(static_cast<double>(m));
  return a;
}

namespace detail {

// exp(-i T) for a real symmetric tridiagonal T given by (diag, subdiag),
// via spectral decomposition: Q e^{-i Lambda} Q^T. The two real GEMMs for
// the cosine and sine parts keep the arithmetic real until assembly.
inline Eigen::MatrixXcd expm_neg_i_tridiagonal(const Eigen::VectorXd& diag,
                                               const Eigen::VectorXd& subdiag) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, subdiag, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("tridiagonal eigendecomposition failed");
  const Eigen::MatrixXd& q = es.eigenvectors();
  const Eigen::VectorXd lam = es.eigenvalues();
  const Eigen::MatrixXd c = q * lam.array().cos().matrix().asDiagonal() * q.transpose();
  const Eigen::MatrixXd s = q * lam.array().sin().matrix().asDiagonal() * q.transpose();
  return c.cast<Complex>() - Complex(0.0, 1.0) * s.cast<Complex>();
}

}  // namespace detail

// D(alpha) = exp(alpha a^dag - alpha^* a) on the truncated space. The
// generator is anti-Hermitian; a diagonal phase similarity maps i*(generator)
// to a real symmetric tridiagonal matrix whose spectral exponential is exact
// to rounding, so the result is unitary on the whole truncated block.
inline FockOperator displacement(Complex alpha, Eigen::Index dim) {
  if (dim < 2) throw std::invalid_argument("displacement: dim must be >= 2");
  const double mag = std::abs(alpha);
  const double theta = std::numbers::pi_v<double> / 2.0 + std::arg(alpha);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd sub(dim - 1);
  for (Eigen::Index m = 0; m + 1 < dim; ++m)
    sub[m] = mag * std::sqrt(static_cast<double>(m) + 1.0);
  Eigen::MatrixXcd core = detail::expm_neg_i_tridiagonal(diag, sub);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex pj = std::polar(1.0, theta * static_cast<double>(j));
    for (Eigen::Index k = 0; k < dim; ++k) {
      const Complex pk = std::polar(1.0, -theta * static_cast<double>(k));
      core(j, k) *= pj * pk;
    }
  }
  return core;
}

// S(r) = exp[(r/2)(a^2 - a^dag^2)]. Two-photon structure: the operator is
// block diagonal over even/odd parity, and each block phase-transforms to a
// real symmetric tridiagonal problem of half the dimension.
inline FockOperator squeeze(double r, Eigen::Index dim) {
  if (dim < 2) throw std::invalid_argument("squeeze: dim must be >= 2");
  FockOperator out = FockOperator::Zero(dim, dim);
  for (int parity = 0; parity < 2; ++parity) {
    const Eigen::Index block = (dim - parity + 1) / 2;
    if (block == 0) continue;
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(block);
    Eigen::VectorXd sub(std::max<Eigen::Index>(block - 1, 0));
    for (Eigen::Index j = 0; j + 1 < block; ++j) {
      const double m = static_cast<double>(2 * j + parity);
      sub[j] = 0.5 * r * std::sqrt((m + 1.0) * (m + 2.0));
    }
    const Eigen::MatrixXcd core = detail::expm_neg_i_tridiagonal(diag, sub);
    const double quarter_pi = std::numbers::pi_v<double> / 4.0;
    for (Eigen::Index j = 0; j < block; ++j) {
      const Eigen::Index mj = 2 * j + parity;
      const Complex pj = std::polar(1.0, -quarter_pi * static_cast<double>(mj));
      for (Eigen::Index k = 0; k < block; ++k) {
        const Eigen::Index mk = 2 * k + parity;
        const Complex pk = std::polar(1.0, quarter_pi * static_cast<double>(mk));
        out(mj, mk) = pj * core(j, k) * pk;
      }
    }
  }
  return out;
}

namespace detail {

// exp(generator) applied to a vector by scaling and repeated squaring of the
// action: Taylor-evaluate exp(G/2^s) v to machine precision, then apply it
// 2^s times. The generators are banded so each application is O(dim); the
// scaled norm below one keeps the Taylor terms factorially decaying.
template <typename ApplyFn>
Eigen::VectorXcd expm_action(const ApplyFn& apply, double norm_bound,
                             Eigen::VectorXcd v) {
  int s = 0;
  while (norm_bound > 1.0 && s < 60) {
    norm_bound *= 0.5;
    ++s;
  }
  const double inv_steps = std::ldexp(1.0, -s);
  const long steps = 1L << s;
  Eigen::VectorXcd term(v.size());
  for (long step = 0; step < steps; ++step) {
    term = v;
    Eigen::VectorXcd acc = v;
    for (int j = 1; j < 60; ++j) {
      term = apply(term) * (inv_steps / j);
      acc += term;
      if (term.norm() < 1e-18 * acc.norm()) break;
    }
    v.swap(acc);
  }
  return v;
}

inline Eigen::VectorXcd apply_displacement_generator(Complex alpha,
                                                     const Eigen::VectorXcd& v) {
  const Eigen::Index dim = v.size();
  Eigen::VectorXcd out(dim);
  for (Eigen::Index m = 0; m < dim; ++m) {
    Complex acc{0.0, 0.0};
    if (m > 0) acc += alpha * std::sqrt(static_cast<double>(m)) * v[m - 1];
    if (m + 1 < dim)
      acc -= std::conj(alpha) * std::sqrt(static_cast<double>(m) + 1.0) * v[m + 1];
    out[m] = acc;
  }
  return out;
}

inline Eigen::VectorXcd apply_squeeze_generator(double r, const Eigen::VectorXcd& v) {
  const Eigen::Index dim = v.size();
  Eigen::VectorXcd out(dim);
  for (Eigen::Index m = 0; m < dim; ++m) {
    Complex acc{0.0, 0.0};
    if (m + 2 < dim)
      acc += 0.5 * r * std::sqrt((m + 1.0) * (m + 2.0)) * v[m + 2];
    if (m >= 2)
      acc -= 0.5 * r * std::sqrt(static_cast<double>(m) * (m - 1.0)) * v[m - 2];
    out[m] = acc;
  }
  return out;
}

inline Eigen::VectorXcd apply_displacement(Complex alpha, const Eigen::VectorXcd& v) {
  const double bound = 2.0 * std::abs(alpha) * std::sqrt(static_cast<double>(v.size()));
  return expm_action(
      [&](const Eigen::VectorXcd& w) { return apply_displacement_generator(alpha, w); },
      bound, v);
}

inline Eigen::VectorXcd apply_squeeze(double r, const Eigen::VectorXcd& v) {
  const double bound = std::abs(r) * static_cast<double>(v.size());
  return expm_action(
      [&](const Eigen::VectorXcd& w) { return apply_squeeze_generator(r, w); }, bound, v);
}

}  // namespace detail

// Operator-route construction of the superposition state: the oracle the
// closed-form coefficients are validated against. The exponentials act on
// the Fock column directly (scaled Taylor action); normalization is purely
// numerical here, independent of the analytic lambda.
inline FieldState build_ssdns_numeric(const SuperpositionParams& p, Eigen::Index dim,
                                      double tol = kDefaultTailTolerance) {
  if (dim < 2 || p.n >= dim)
    throw std::invalid_argument("build_ssdns_numeric: dim too small for seed state");
  Eigen::VectorXcd seed = Eigen::VectorXcd::Zero(dim);
  seed[p.n] = 1.0;
  seed = detail::apply_squeeze(p.r, seed);
  Eigen::VectorXcd psi = detail::apply_displacement(p.alpha, seed) +
                         p.eps() * detail::apply_displacement(-p.alpha, seed);
  const double norm = psi.norm();
  if (norm * norm < 1e-20)
    throw DegenerateStateError("operator-built superposition has vanishing norm");
  psi /= norm;
  FieldState out{psi, tail_mass(psi)};
  if (out.tail_mass >= tol)
    throw TruncationError(out.tail_mass, tol, static_cast<std::size_t>(dim));
  return out;
}

// Exact evolution oracle using the 2x2 block structure of the resonant RWA
// Hamiltonian: each pair {|m,+>, |m+k,->} rotates by angle T sqrt(h(m,k)).
inline JointState hamiltonian_evolve_oracle(const FieldState& field, int k, double T,
                                            double tol = kDefaultTailTolerance) {
  const Eigen::Index dim = field.dim();
  const Eigen::Index guard =
      std::min<Eigen::Index>(dim, k + std::max<Eigen::Index>(1, dim / 20));
  const double top = field.amps.tail(guard).squaredNorm();
  if (top >= tol) throw TruncationError(top, tol, static_cast<std::size_t>(dim));

  JointState out;
  out.k = k;
  out.excited_amps.resize(dim);
  out.ground_amps.resize(dim);
  for (Eigen::Index m = 0; m < dim; ++m) {
    const double angle = T * sqrt_h(static_cast<int>(m), k);
    out.excited_amps[m] = field.amps[m] * std::cos(angle);
    out.ground_amps[m] = Complex(0.0, -1.0) * field.amps[m] * std::sin(angle);
  }
  return out;
}

// Second, independent evolution route: dense spectral exponential of the
// full (2 dim) x (2 dim) interaction Hamiltonian. Meant for small dim.
inline JointState hamiltonian_evolve_expm(const FieldState& field, int k, double T) {
  const Eigen::Index dim = field.dim();
  const Eigen::Index full = 2 * dim;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(full, full);
  for (Eigen::Index m = 0; m + k < dim; ++m) {
    const double g = sqrt_h(static_cast<int>(m), k);
    h(dim + m + k, m) = g;
    h(m, dim + m + k) = g;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("joint Hamiltonian eigendecomposition failed");
  const Eigen::MatrixXcd q = es.eigenvectors().cast<Complex>();
  Eigen::VectorXcd phases(full);
  for (Eigen::Index i = 0; i < full; ++i)
    phases[i] = std::polar(1.0, -T * es.eigenvalues()[i]);

  Eigen::VectorXcd x0 = Eigen::VectorXcd::Zero(full);
  x0.head(dim) = field.amps;
  const Eigen::VectorXcd y = q * (phases.asDiagonal() * (q.adjoint() * x0));

  JointState out;
  out.k = k;
  out.excited_amps = y.head(dim);
  out.ground_amps = Eigen::VectorXcd::Zero(dim);
  for (Eigen::Index m = 0; m + k < dim; ++m) out.ground_amps[m] = y[dim + m + k];
  return out;
}

}  // namespace mpjcm

#endif  // MPJCM_FOCK_HPP

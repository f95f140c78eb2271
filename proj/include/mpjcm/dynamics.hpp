#ifndef MPJCM_DYNAMICS_HPP
#define MPJCM_DYNAMICS_HPP

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "mpjcm/errors.hpp"
#include "mpjcm/numerics.hpp"

namespace mpjcm {

// Resonant k-photon model in the interaction picture; T = g*t is the scaled
// time everywhere.
struct ModelParams {
  int k = 1;
};

// Pure atom+field state after resonant evolution from |field> x |excited>:
//   excited_amps[m] multiplies |m, +>,
//   ground_amps[m]  multiplies |m+k, ->.
struct JointState {
  int k = 1;
  Eigen::VectorXcd excited_amps;
  Eigen::VectorXcd ground_amps;

  Eigen::Index dim() const { return excited_amps.size(); }

  double norm_sq() const {
    return excited_amps.squaredNorm() + ground_amps.squaredNorm();
  }
};

using FieldDensityMatrix = Eigen::MatrixXcd;

// Exact solution of the resonant k-photon exchange:
//   A_m(T) = C_m cos(T sqrt(h(m,k))),  B_m(T) = -i C_m sin(T sqrt(h(m,k))).
// Requires headroom at the top of the truncated space: the ground branch
// lives k levels above the excited one.
inline JointState evolve(const Eigen::VectorXcd& c, ModelParams model, double T,
                         double tol = kDefaultTailTolerance) {
  const Eigen::Index dim = c.size();
  const Eigen::Index guard = std::min<Eigen::Index>(
      dim, model.k + std::max<Eigen::Index>(1, dim / 20));
  const double top = c.tail(guard).squaredNorm();
  if (top >= tol) throw TruncationError(top, tol, static_cast<std::size_t>(dim));

  JointState out;
  out.k = model.k;
  out.excited_amps.resize(dim);
  out.ground_amps.resize(dim);
  for (Eigen::Index m = 0; m < dim; ++m) {
    const double phase = T * sqrt_h(static_cast<int>(m), model.k);
    out.excited_amps[m] = c[m] * std::cos(phase);
    out.ground_amps[m] = Complex(0.0, -1.0) * c[m] * std::sin(phase);
  }
  return out;
}

// <sigma_z(T)> = sum_m P(m) cos(2 T sqrt(h(m,k)))
inline double atomic_inversion(const Eigen::VectorXd& probs, ModelParams model,
                               double T) {
  double acc = 0.0;
  for (Eigen::Index m = 0; m < probs.size(); ++m)
    acc += probs[m] * std::cos(2.0 * T * sqrt_h(static_cast<int>(m), model.k));
  return acc;
}

inline double inversion_from_joint(const JointState& psi) {
  return psi.excited_amps.squaredNorm() - psi.ground_amps.squaredNorm();
}

// P(m,T) = P(m) cos^2(T sqrt(h(m,k))) + P(m-k) sin^2(T sqrt(h(m-k,k))).
// The input distribution must carry k zero-padded top entries so the shifted
// branch stays inside the vector.
inline Eigen::VectorXd photon_distribution_t(const Eigen::VectorXd& probs,
                                             ModelParams model, double T) {
  const Eigen::Index dim = probs.size();
  Eigen::VectorXd out(dim);
  for (Eigen::Index m = 0; m < dim; ++m) {
    const double cm = std::cos(T * sqrt_h(static_cast<int>(m), model.k));
    out[m] = probs[m] * cm * cm;
    if (m >= model.k) {
      const double sm = std::sin(T * sqrt_h(static_cast<int>(m) - model.k, model.k));
      out[m] += probs[m - model.k] * sm * sm;
    }
  }
  return out;
}

// rho_f = Tr_atom |psi><psi|; rank <= 2. Ground-branch entries landing above
// the truncation are dropped, which the evolve() headroom check bounds below
// the tail tolerance.
inline FieldDensityMatrix reduced_field_dm(const JointState& psi) {
  const Eigen::Index dim = psi.dim();
  const int k = psi.k;
  FieldDensityMatrix rho = psi.excited_amps * psi.excited_amps.adjoint();
  const Eigen::Index kept = dim - k;
  if (kept > 0) {
    const Eigen::VectorXcd b = psi.ground_amps.head(kept);
    rho.block(k, k, kept, kept) += b * b.adjoint();
  }
  return rho;
}

// T_f = Tr[rho^2]; for Hermitian rho this is the squared Frobenius norm.
inline double purity(const FieldDensityMatrix& rho) { return rho.squaredNorm(); }

inline double field_fidelity(const FieldDensityMatrix& rho,
                             const Eigen::VectorXcd& reference) {
  if (rho.rows() != reference.size())
    throw std::invalid_argument("field_fidelity: dimension mismatch");
  return (reference.adjoint() * rho * reference).value().real();
}

// Field state after one two-photon revival period: the initial coefficients
// shifted up two levels with alternating signs, sum_m C_m e^{i m pi} |m+2>.
inline Eigen::VectorXcd two_photon_shifted_state(const Eigen::VectorXcd& c) {
  const Eigen::Index dim = c.size();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  for (Eigen::Index m = 0; m + 2 < dim; ++m)
    out[m + 2] = (m % 2 ? -1.0 : 1.0) * c[m];
  out.normalize();
  return out;
}

}  // namespace mpjcm

#endif  // MPJCM_DYNAMICS_HPP

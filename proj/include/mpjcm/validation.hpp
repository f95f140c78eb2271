#ifndef MPJCM_VALIDATION_HPP
#define MPJCM_VALIDATION_HPP

#include <Eigen/Core>
#include <chrono>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "mpjcm/dynamics.hpp"
#include "mpjcm/errors.hpp"
#include "mpjcm/fock.hpp"
#include "mpjcm/states.hpp"
#include "mpjcm/wigner.hpp"

namespace mpjcm {

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_dev = 0.0;
  double tol = 0.0;
  double seconds = 0.0;
  std::string note;
};

namespace detail {

class CheckTimer {
 public:
  CheckTimer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Largest componentwise deviation after aligning the unobservable global
// phase on the largest-magnitude oracle component.
inline double phase_aligned_deviation(const Eigen::VectorXcd& closed,
                                      const Eigen::VectorXcd& oracle) {
  Eigen::Index idx = 0;
  oracle.cwiseAbs().maxCoeff(&idx);
  if (std::abs(closed[idx]) < 1e-14) return (closed - oracle).cwiseAbs().maxCoeff();
  Complex phase = oracle[idx] / closed[idx];
  phase /= std::abs(phase);
  return (closed * phase - oracle).cwiseAbs().maxCoeff();
}

inline double joint_deviation(const JointState& a, const JointState& b) {
  return std::max((a.excited_amps - b.excited_amps).cwiseAbs().maxCoeff(),
                  (a.ground_amps - b.ground_amps).cwiseAbs().maxCoeff());
}

inline std::vector<Complex> canonical_eps_values() {
  return {Complex(0.0, 0.0), Complex(0.0, 1.0), Complex(1.0, 0.0), Complex(-1.0, 0.0)};
}

inline std::vector<SuperpositionParams> evolution_check_states() {
  return {SuperpositionParams::with_eps(2.0, 0.0, 0, {0.0, 0.0}),
          SuperpositionParams::with_eps(1.5, 0.3, 1, {0.0, 1.0}),
          SuperpositionParams::with_eps(1.0, -0.2, 2, {1.0, 0.0})};
}

}  // namespace detail

// Closed-form coefficients (all branches) against the operator construction
// over the full parameter grid.
inline CheckResult check_states_vs_operator(double tol = 1e-8) {
  detail::CheckTimer timer;
  CheckResult res;
  res.name = "states coefficients vs operator construction";
  res.tol = tol;
  double worst = 0.0;
  for (double alpha : {0.5, 1.0, 3.0, 5.0}) {
    for (double r : {0.0, 0.3, -0.3, 1.0, -1.0}) {
      for (int n : {0, 1, 2, 3}) {
        for (Complex eps : detail::canonical_eps_values()) {
          const auto p = SuperpositionParams::with_eps(alpha, r, n, eps);
          // Tail tolerance well below the comparison tolerance keeps the
          // oracle's top-entry truncation noise out of the deviation.
          const Eigen::Index dim = checked_dim(p, 1, 1e-18);
          const FieldState oracle = build_ssdns_numeric(p, dim);
          const Eigen::VectorXcd closed = coefficients(p, dim);
          worst = std::max(worst, detail::phase_aligned_deviation(closed, oracle.amps));
        }
      }
    }
  }
  res.max_dev = worst;
  res.pass = worst < tol;
  res.seconds = timer.seconds();
  return res;
}

// Closed-form time evolution against the 2x2 block-rotation oracle.
inline CheckResult check_evolution_block(double tol = 1e-10) {
  detail::CheckTimer timer;
  CheckResult res;
  res.name = "evolution amplitudes vs block-rotation oracle";
  res.tol = tol;
  double worst = 0.0;
  for (const auto& p : detail::evolution_check_states()) {
    const Eigen::Index dim = suggest_dim(p, 4);
    const Eigen::VectorXcd c = coefficients(p, dim);
    const FieldState field{c, tail_mass(c)};
    for (int k : {1, 2, 3, 4}) {
      for (double T : {0.1, 1.0, 7.7, 22.21}) {
        const JointState direct = evolve(c, {k}, T);
        const JointState oracle = hamiltonian_evolve_oracle(field, k, T);
        worst = std::max(worst, detail::joint_deviation(direct, oracle));
      }
    }
  }
  res.max_dev = worst;
  res.pass = worst < tol;
  res.seconds = timer.seconds();
  return res;
}

// Closed-form evolution against the dense spectral exponential of the full
// joint Hamiltonian at small dimension.
inline CheckResult check_evolution_expm(double tol = 1e-8) {
  detail::CheckTimer timer;
  CheckResult res;
  res.name = "evolution amplitudes vs full matrix exponential";
  res.tol = tol;
  const Eigen::Index dim = 60;
  double worst = 0.0;
  for (const auto& p : detail::evolution_check_states()) {
    const Eigen::VectorXcd c = coefficients(p, dim);
    const FieldState field{c, tail_mass(c)};
    for (int k : {1, 2, 3, 4}) {
      for (double T : {0.1, 1.0, 7.7, 22.21}) {
        const JointState direct = evolve(c, {k}, T);
        const JointState oracle = hamiltonian_evolve_expm(field, k, T);
        worst = std::max(worst, detail::joint_deviation(direct, oracle));
      }
    }
  }
  res.max_dev = worst;
  res.pass = worst < tol;
  res.seconds = timer.seconds();
  return res;
}

// Wigner series (Laguerre form) against the position-space quadrature.
inline CheckResult check_wigner_series_vs_integral(double tol = 1e-6) {
  detail::CheckTimer timer;
  CheckResult res;
  res.name = "Wigner series vs quadrature oracle";
  res.tol = tol;
  const Eigen::Index dim = 40;
  struct Scenario {
    SuperpositionParams p;
    int k;
    double T;
  };
  const std::vector<Scenario> scenarios = {
      {SuperpositionParams::with_eps(1.0, 0.0, 0, {1.0, 0.0}), 1, 0.7},
      {SuperpositionParams::with_eps(1.2, 0.2, 1, {0.0, 0.0}), 2, 1.3},
      {SuperpositionParams::with_eps(0.8, 0.0, 0, {-1.0, 0.0}), 1, 2.1}};
  double worst = 0.0;
  for (const auto& sc : scenarios) {
    const Eigen::VectorXcd c = coefficients(sc.p, dim);
    const JointState psi = evolve(c, {sc.k}, sc.T);
    const FieldDensityMatrix rho = reduced_field_dm(psi);
    for (double x : {-1.8, 0.0, 1.8}) {
      for (double p : {-1.8, 0.0, 1.8}) {
        const double series = wigner_point(rho, x, p);
        const double integral = wigner_integral_oracle(psi, x, p);
        worst = std::max(worst, std::abs(series - integral));
      }
    }
  }
  res.max_dev = worst;
  res.pass = worst < tol;
  res.seconds = timer.seconds();
  return res;
}

// Origin identities: the diagonal series equals the full point evaluation;
// fixed-parity states tie W(0,T) to the inversion for odd k; even k freezes
// the origin at its initial value.
inline CheckResult check_origin_identities(double tol = 1e-10) {
  detail::CheckTimer timer;
  CheckResult res;
  res.name = "Wigner origin identities";
  res.tol = tol;
  double worst = 0.0;

  {
    const auto p = SuperpositionParams::with_eps(2.0, 0.3, 1, {0.0, 1.0});
    const Eigen::Index dim = suggest_dim(p, 4);
    const Eigen::VectorXcd c = coefficients(p, dim);
    const Eigen::VectorXd probs = c.cwiseAbs2();
    for (int k : {1, 2, 3, 4}) {
      for (double T : {0.0, 0.7, 3.3, 11.1}) {
        const JointState psi = evolve(c, {k}, T);
        const double series = wigner_origin_series(probs, {k}, T);
        const double point = wigner_point(psi, 0.0, 0.0);
        worst = std::max(worst, std::abs(series - point));
      }
    }
  }

  for (double eps_sign : {1.0, -1.0}) {
    const auto p = SuperpositionParams::with_eps(2.0, 0.3, 0, {eps_sign, 0.0});
    const Eigen::Index dim = suggest_dim(p, 4);
    const Eigen::VectorXd probs = photon_distribution(p, dim);
    for (int k : {1, 3}) {
      for (double T = 0.0; T <= 20.0; T += 0.5) {
        const double w0 = wigner_origin_series(probs, {k}, T);
        const double inv = atomic_inversion(probs, {k}, T);
        worst = std::max(worst, std::abs(w0 - eps_sign * inv / std::numbers::pi_v<double>));
      }
    }
    for (int k : {2, 4}) {
      const double w00 = wigner_origin_series(probs, {k}, 0.0);
      for (double T = 0.0; T <= 20.0; T += 0.5)
        worst = std::max(worst, std::abs(wigner_origin_series(probs, {k}, T) - w00));
    }
  }

  res.max_dev = worst;
  res.pass = worst < tol;
  res.seconds = timer.seconds();
  return res;
}

// Deliberately undersized truncations must fail loudly.
inline CheckResult check_truncation_path() {
  detail::CheckTimer timer;
  CheckResult res;
  res.name = "truncation error path";
  res.tol = 0.0;
  bool build_threw = false;
  bool evolve_threw = false;
  try {
    (void)build_ssdns_numeric(SuperpositionParams::with_eps(5.0, 0.0, 0, {0.0, 0.0}), 12);
  } catch (const TruncationError&) {
    build_threw = true;
  }
  try {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(8);
    c[7] = 1.0;
    (void)evolve(c, {2}, 1.0);
  } catch (const TruncationError&) {
    evolve_threw = true;
  }
  res.pass = build_threw && evolve_threw;
  res.note = res.pass ? "both undersized paths raised TruncationError"
                      : "undersized path did not raise TruncationError";
  res.seconds = timer.seconds();
  return res;
}

// Seeded random spot checks: coefficients against the operator oracle and
// the excitation conservation law on random parameter draws.
inline CheckResult check_random_spots(unsigned seed, double tol = 1e-8) {
  detail::CheckTimer timer;
  CheckResult res;
  res.name = "seeded random spot checks (seed " + std::to_string(seed) + ")";
  res.tol = tol;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> alpha_dist(0.3, 4.0);
  std::uniform_real_distribution<double> r_dist(-0.8, 0.8);
  std::uniform_int_distribution<int> n_dist(0, 3);
  std::uniform_int_distribution<int> eps_dist(0, 3);
  std::uniform_int_distribution<int> k_dist(1, 4);
  std::uniform_real_distribution<double> t_dist(0.0, 30.0);

  const auto eps_values = detail::canonical_eps_values();
  double worst = 0.0;
  for (int trial = 0; trial < 6; ++trial) {
    const auto p = SuperpositionParams::with_eps(alpha_dist(rng), r_dist(rng),
                                                 n_dist(rng), eps_values[eps_dist(rng)]);
    const int k = k_dist(rng);
    const double T = t_dist(rng);
    const Eigen::Index dim = checked_dim(p, k, 1e-18);

    const FieldState oracle = build_ssdns_numeric(p, dim);
    const Eigen::VectorXcd closed = coefficients(p, dim);
    worst = std::max(worst, detail::phase_aligned_deviation(closed, oracle.amps));

    const Eigen::VectorXd probs = closed.cwiseAbs2();
    const Eigen::VectorXd probs_t = photon_distribution_t(probs, {k}, T);
    double mean0 = 0.0, mean_t = 0.0;
    for (Eigen::Index m = 0; m < dim; ++m) {
      mean0 += static_cast<double>(m) * probs[m];
      mean_t += static_cast<double>(m) * probs_t[m];
    }
    const double excitation_drift =
        std::abs(mean_t + 0.5 * k * atomic_inversion(probs, {k}, T) - (mean0 + 0.5 * k));
    worst = std::max(worst, excitation_drift);
  }
  res.max_dev = worst;
  res.pass = worst < tol;
  res.seconds = timer.seconds();
  return res;
}

inline std::vector<CheckResult> run_validation_suite(unsigned seed) {
  return {check_states_vs_operator(), check_evolution_block(),
          check_evolution_expm(),     check_wigner_series_vs_integral(),
          check_origin_identities(),  check_truncation_path(),
          check_random_spots(seed)};
}

}  // namespace mpjcm

#endif  // MPJCM_VALIDATION_HPP

#ifndef MPJCM_OBSERVABLES_HPP
#define MPJCM_OBSERVABLES_HPP

#include <Eigen/Core>
#include <cmath>
#include <complex>

#include "mpjcm/dynamics.hpp"
#include "mpjcm/errors.hpp"
#include "mpjcm/numerics.hpp"

namespace mpjcm {

// Quadrature variance factors for X = (a + a^dag)/2 and Y = (a - a^dag)/2i;
// a negative factor signals squeezing in that quadrature.
struct QuadratureReport {
  double F = 0.0;
  double S = 0.0;
  double mean_x = 0.0;
  double mean_y = 0.0;
};

// Normal-ordered moment <a^dag^s a^s2> from the reduced density matrix:
// the index shift is done analytically, no ladder matrices are built.
inline Complex moment(const FieldDensityMatrix& rho, int s, int s2) {
  const Eigen::Index dim = rho.rows();
  Complex acc{0.0, 0.0};
  for (Eigen::Index m = s2; m < dim; ++m) {
    const Eigen::Index row = m - s2 + s;
    if (row >= dim) break;
    double w = 1.0;
    if (s2 > 0) w *= sqrt_h(static_cast<int>(m) - s2, s2);
    if (s > 0) w *= sqrt_h(static_cast<int>(m) - s2, s);
    acc += rho(row, m) * w;
  }
  return acc;
}

// Q = (<n^2> - <n>^2 - <n>)/<n>; undefined on (numerical) vacuum.
inline double mandel_q(const FieldDensityMatrix& rho) {
  const double n1 = moment(rho, 1, 1).real();
  if (n1 <= 1e-12) throw VacuumError("Mandel Q undefined: <n> ~ 0");
  const double n2 = moment(rho, 2, 2).real();  // <a^dag^2 a^2> = <n^2> - <n>
  return (n2 - n1 * n1) / n1;
}

inline QuadratureReport squeezing_factors(const FieldDensityMatrix& rho) {
  const Complex a1 = moment(rho, 0, 1);   // <a>
  const Complex a2 = moment(rho, 0, 2);   // <a^2>
  const double n1 = moment(rho, 1, 1).real();
  QuadratureReport rep;
  rep.mean_x = a1.real();
  rep.mean_y = a1.imag();
  rep.F = 2.0 * n1 + 2.0 * a2.real() - 4.0 * rep.mean_x * rep.mean_x;
  rep.S = 2.0 * n1 - 2.0 * a2.real() - 4.0 * rep.mean_y * rep.mean_y;
  return rep;
}

}  // namespace mpjcm

#endif  // MPJCM_OBSERVABLES_HPP

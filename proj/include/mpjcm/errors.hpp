#ifndef MPJCM_ERRORS_HPP
#define MPJCM_ERRORS_HPP

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace mpjcm {

namespace detail {
inline std::string truncation_message(double tail_mass, double tolerance,
                                      std::size_t current_dim) {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "truncated Fock space too small: tail mass %.3e >= tolerance %.3e "
                "at dim %zu; retry with dim %zu",
                tail_mass, tolerance, current_dim, 2 * current_dim);
  return buf;
}
}  // namespace detail

// Raised when probability mass leaks into the top of the truncated Fock
// space. Carries the dimension the caller should retry with.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(double tail_mass, double tolerance, std::size_t current_dim)
      : std::runtime_error(detail::truncation_message(tail_mass, tolerance, current_dim)),
        suggested_dim(2 * current_dim) {}

  std::size_t suggested_dim;
};

// The superposition vanishes identically (e.g. eps = -1 with alpha = 0).
class DegenerateStateError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mandel Q is undefined for a field with no photons.
class VacuumError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quarter-revival coefficient ratio evaluated at its pole m = alpha^2.
class PoleError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Envelope splitting condition has no real solution.
class NoRootError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical quadrature could not reach the requested accuracy or the
// integrand has not decayed at the integration boundary.
class QuadratureError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scenario/config file problems, with line and field diagnostics.
class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mpjcm

#endif  // MPJCM_ERRORS_HPP

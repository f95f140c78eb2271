#include <doctest.h>

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <numbers>

#include "mpjcm/asymptotics.hpp"
#include "mpjcm/dynamics.hpp"
#include "mpjcm/envelope.hpp"
#include "mpjcm/states.hpp"
#include "mpjcm/validation.hpp"

using namespace mpjcm;

TEST_CASE("harmonic parameters") {
  const HarmonicApproxParams one = harmonic_params(1.0);
  CHECK(one.eta1 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(one.eta2 == doctest::Approx(1.0).epsilon(1e-14));
  const HarmonicApproxParams big = harmonic_params(257.0);
  CHECK(big.eta1 == doctest::Approx(std::sqrt(257.0) + 1.0 / std::sqrt(257.0))
                        .epsilon(1e-14));
  CHECK(big.eta2 == doctest::Approx(1.0 / std::sqrt(257.0)).epsilon(1e-14));
  CHECK(big.eta1 == doctest::Approx(16.0937).epsilon(1e-5));
  CHECK(big.eta2 == doctest::Approx(0.062378).epsilon(1e-4));
  const HarmonicApproxParams two = two_photon_params();
  CHECK(two.eta1 == 3.0);
  CHECK(two.eta2 == 2.0);
  CHECK_THROWS_AS((void)harmonic_params(0.0), std::invalid_argument);
}

TEST_CASE("asymptotic inversion") {
  const double alpha = 16.0;
  const HarmonicApproxParams eta = harmonic_params(alpha * alpha + 1.0);
  SUBCASE("starts exactly at one") {
    for (Complex eps : {Complex(0, 0), Complex(1, 0), Complex(0, 1), Complex(-1, 0)})
      CHECK(inversion_asymptotic(0.0, alpha, eps, eta) ==
            doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("bounded by one in magnitude up to small slack") {
    for (double T = 0.0; T <= 120.0; T += 0.11)
      CHECK(std::abs(inversion_asymptotic(T, alpha, {1, 0}, eta)) <= 1.0 + 1e-9);
  }
  SUBCASE("two-photon machinery has intensity-independent envelope period pi") {
    const HarmonicApproxParams two = two_photon_params();
    for (double a : {3.0, 7.0, 11.0}) {
      for (double T = 0.0; T <= 3.0; T += 0.37) {
        CHECK(envelope_f1(T + std::numbers::pi_v<double>, a, two) ==
              doctest::Approx(envelope_f1(T, a, two)).epsilon(1e-12));
        CHECK(envelope_f2(T + std::numbers::pi_v<double>, a, two) ==
              doctest::Approx(envelope_f2(T, a, two)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("envelope split times") {
  const double alpha = 16.0;
  const HarmonicApproxParams eta = harmonic_params(257.0);
  SUBCASE("n = 1 inverts the stated condition") {
    const auto splits = envelope_split_times(alpha, 1, eta);
    REQUIRE(splits.size() == 2);
    CHECK(splits[0] ==
          doctest::Approx(2.0 * std::asin(1.0 / 32.0) / eta.eta2).epsilon(1e-12));
    for (double t : splits) {
      CHECK(t >= 0.0);
      CHECK(t < 2.0 * std::numbers::pi_v<double> / eta.eta2);
      CHECK(std::abs(envelope_f1(t, alpha, eta)) < 1e-10);
    }
  }
  SUBCASE("n = 2 returns the four quartic roots") {
    const auto splits = envelope_split_times(alpha, 2, eta);
    REQUIRE(splits.size() == 4);
    for (double t : splits) {
      const double s2 = std::pow(std::sin(0.5 * eta.eta2 * t), 2);
      const double a2 = alpha * alpha;
      CHECK(std::abs(8.0 * a2 * a2 * s2 * s2 - 8.0 * a2 * s2 + 1.0) < 1e-9);
    }
  }
  SUBCASE("no roots below alpha = 1/2") {
    CHECK_THROWS_AS((void)envelope_split_times(0.4, 1, harmonic_params(4.0)),
                    NoRootError);
  }
}

TEST_CASE("revival times") {
  const auto [ts, ti] = revival_times(50.0);
  CHECK(ts == doctest::Approx(44.428829).epsilon(1e-7));
  CHECK(ti == doctest::Approx(22.214415).epsilon(1e-7));
  const auto [ts49, ti49] = revival_times(49.0);
  CHECK(ts49 == doctest::Approx(43.982297).epsilon(1e-7));
  CHECK(ti49 == doctest::Approx(21.991149).epsilon(1e-7));
  CHECK(ti == doctest::Approx(0.5 * ts).epsilon(1e-14));
  CHECK_THROWS_AS((void)revival_times(-1.0), std::invalid_argument);
}

TEST_CASE("quarter-revival coefficient ratio") {
  SUBCASE("matches the exact coefficient ratio for the displaced one-photon state") {
    const double alpha = 10.0;
    const auto p = SuperpositionParams::with_eps(alpha, 0.0, 1, {0, 0});
    const Eigen::VectorXcd c = coefficients(p, checked_dim(p));
    for (int m : {2, 90, 101, 110, 123}) {
      const Complex exact = c[m - 2] / c[m];
      const double predicted = quarter_revival_ratio(m, alpha);
      CAPTURE(m);
      CHECK(std::abs(exact.imag()) < 1e-12 * std::abs(exact));
      CHECK(exact.real() == doctest::Approx(predicted).epsilon(1e-10));
    }
  }
  SUBCASE("near the pole the literal value is large and signed") {
    CHECK(quarter_revival_ratio(101, 10.0) ==
          doctest::Approx(-std::sqrt(101.0 * 100.0) / 100.0).epsilon(1e-12));
  }
  SUBCASE("tends to one in the comparable-m band") {
    for (int m : {90, 110})
      CHECK(std::abs(quarter_revival_ratio(m, 10.0) - 1.0) < 0.15);
  }
  SUBCASE("pole raises PoleError") {
    CHECK_THROWS_AS((void)quarter_revival_ratio(100, 10.0), PoleError);
  }
}

TEST_CASE("quarter-revival factorized state") {
  const double quarter = std::numbers::pi_v<double> / 4.0;
  const auto p = SuperpositionParams::with_eps(7.0, 0.0, 1, {0, 0});
  const Eigen::VectorXcd c = coefficients(p, checked_dim(p, 2));
  const QuarterRevivalState approx = quarter_revival_state(c);

  SUBCASE("atom part is (|+> + i|->)/sqrt(2)") {
    CHECK(std::abs(approx.atom.excited - Complex(1.0 / std::numbers::sqrt2_v<double>, 0)) <
          1e-15);
    CHECK(std::abs(approx.atom.ground - Complex(0, 1.0 / std::numbers::sqrt2_v<double>)) <
          1e-15);
    CHECK(approx.field.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("overlaps the exact reduced state at T = pi/4, k = 2") {
    const JointState psi = evolve(c, {2}, quarter);
    const FieldDensityMatrix rho = reduced_field_dm(psi);
    CHECK(field_fidelity(rho, approx.field) > 0.95);
    CHECK(purity(rho) > 0.9);
  }
  SUBCASE("cosine modulation never introduces new zeros") {
    double min_abs_cos = 1.0;
    for (int m = 0; m < 1000; ++m)
      min_abs_cos = std::min(min_abs_cos, std::abs(std::cos(quarter * (m + 1.5))));
    CHECK(min_abs_cos > 0.38);
    const Eigen::VectorXd pd = c.cwiseAbs2();
    const Eigen::VectorXd pa = approx.field.cwiseAbs2();
    for (Eigen::Index m = 0; m < pd.size(); ++m)
      if (pd[m] > 1e-8) CHECK(pa[m] > 0.0);
  }
}

TEST_CASE("validation spot checks are deterministic per seed") {
  const mpjcm::CheckResult a = mpjcm::check_random_spots(5);
  const mpjcm::CheckResult b = mpjcm::check_random_spots(5);
  CHECK(a.max_dev == b.max_dev);
  const mpjcm::CheckResult c = mpjcm::check_random_spots(6);
  CHECK(a.max_dev != c.max_dev);
}

TEST_CASE("envelope machinery") {
  SUBCASE("moving RMS of a pure tone is flat at 1/sqrt(2)") {
    const double dt = 0.01;
    std::vector<double> y;
    for (double t = 0.0; t <= 50.0; t += dt) y.push_back(std::cos(7.0 * t));
    const Envelope env = moving_rms_envelope(0.0, dt, y, 2.0 * std::numbers::pi_v<double>, 0.1);
    for (std::size_t i = 10; i + 10 < env.value.size(); ++i)
      CHECK(env.value[i] == doctest::Approx(1.0 / std::numbers::sqrt2_v<double>)
                                .epsilon(2e-2));
  }
  SUBCASE("significant peaks of a modulated tone sit at the modulation maxima") {
    const double dt = 0.01;
    std::vector<double> y;
    for (double t = 0.0; t <= 80.0; t += dt) {
      const double gate = std::exp(-0.5 * std::pow(std::sin(0.1 * t), 2) * 60.0);
      y.push_back(gate * std::cos(9.0 * t));
    }
    const Envelope env = moving_rms_envelope(0.0, dt, y, 4.0, 0.05);
    const auto peaks = significant_peaks(env, 0.3, 5.0);
    REQUIRE(peaks.size() >= 2);
    // interior modulation maxima at pi/0.1 and 2 pi/0.1
    CHECK(std::abs(peaks[0].t - std::numbers::pi_v<double> / 0.1) < 1.0);
    CHECK(std::abs(peaks[1].t - 2.0 * std::numbers::pi_v<double> / 0.1) < 1.0);
  }
  SUBCASE("cross correlation of identical signals is one") {
    std::vector<double> a, b;
    for (double t = 0.0; t < 10.0; t += 0.05) {
      a.push_back(std::sin(t) + 0.2 * t);
      b.push_back(std::sin(t) + 0.2 * t);
    }
    CHECK(normalized_cross_correlation(a, b) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

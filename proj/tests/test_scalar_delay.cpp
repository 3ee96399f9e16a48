#include <cmath>
#include <complex>
#include <stdexcept>

#include "dac/lambert_w.hpp"
#include "dac/scalar_delay.hpp"
#include "doctest.h"

using dac::ScalarSystem;

namespace {
const double kE = std::exp(1.0);

// residual of the characteristic equation s = b + a e^{-s tau} at the root
// reported through the Lambert route
double char_residual(const ScalarSystem& sys, double tau) {
  const std::complex<double> w =
      dac::lambert_w(0, sys.a * tau * std::exp(-tau * sys.b));
  const std::complex<double> s = w / tau + sys.b;
  return std::abs(s - sys.b - sys.a * std::exp(-s * tau));
}

}  // namespace

TEST_CASE("construction enforces the stability assumption") {
  CHECK_THROWS_AS(ScalarSystem(0.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(ScalarSystem(1.0, -1.0), std::invalid_argument);  // a+b = 0
  CHECK_THROWS_AS(ScalarSystem(2.0, -1.0), std::invalid_argument);
  CHECK_NOTHROW(ScalarSystem(-1.0, 0.5));
}

TEST_CASE("critical delay closed form and unbounded cases") {
  const ScalarSystem pure(-1.0, 0.0);
  REQUIRE(dac::admissible_delay(pure));
  CHECK(*dac::admissible_delay(pure) ==
        doctest::Approx(std::acos(0.0)).epsilon(1e-12));  // pi/2

  const ScalarSystem sys(-4.5, 1.5);
  REQUIRE(dac::admissible_delay(sys));
  CHECK(*dac::admissible_delay(sys) ==
        doctest::Approx(std::acos(1.0 / 3.0) / std::sqrt(18.0)).epsilon(1e-12));

  CHECK_FALSE(dac::admissible_delay(ScalarSystem(-1.0, -1.0)));
  CHECK_FALSE(dac::admissible_delay(ScalarSystem(-1.0, -2.5)));
  CHECK_FALSE(dac::admissible_delay(ScalarSystem(1.0, -1.5)));
}

TEST_CASE("decay rate: delay-free limit, root residual, stability flag") {
  const ScalarSystem sys(-3.0, 1.0);
  CHECK(dac::decay_rate(sys, 0.0).value == doctest::Approx(2.0));
  CHECK(dac::decay_rate(sys, 0.0).stable);

  const double tau_bar = *dac::admissible_delay(sys);
  for (double f : {0.05, 0.3, 0.7, 0.95}) {
    const double tau = f * tau_bar;
    const auto r = dac::decay_rate(sys, tau);
    CHECK(r.stable);
    CHECK(r.value > 0.0);
    CHECK(char_residual(sys, tau) < 1e-10);
  }
  const auto beyond = dac::decay_rate(sys, 1.1 * tau_bar);
  CHECK_FALSE(beyond.stable);
  CHECK(beyond.value < 0.0);
  // open interval: the rate vanishes exactly at the boundary
  CHECK(dac::decay_rate(sys, tau_bar).value ==
        doctest::Approx(0.0).epsilon(1e-8));
  CHECK_THROWS_AS((void)dac::decay_rate(sys, -0.1), std::invalid_argument);
}

TEST_CASE("small delays approach the delay-free rate") {
  const ScalarSystem sys(-2.0, 0.5);
  CHECK(dac::decay_rate(sys, 1e-8).value ==
        doctest::Approx(sys.rho0()).epsilon(1e-6));
}

TEST_CASE("optimal delay: closed forms and scan-oracle agreement") {
  {
    const ScalarSystem pure(-2.0, 0.0);
    const auto opt = dac::optimal_delay(pure);
    CHECK(opt.tau_star == doctest::Approx(1.0 / (2.0 * kE)).epsilon(1e-12));
    CHECK(opt.rho_star == doctest::Approx(2.0 * kE).epsilon(1e-12));
  }
  for (const ScalarSystem& sys :
       {ScalarSystem(-3.0, 1.0), ScalarSystem(-4.5, 1.5),
        ScalarSystem(-1.0, -0.4), ScalarSystem(-2.0, -3.0)}) {
    const auto opt = dac::optimal_delay(sys);
    CHECK(dac::decay_rate(sys, opt.tau_star).value ==
          doctest::Approx(opt.rho_star).epsilon(1e-9));
    // dense-scan oracle over the rising-and-falling segment
    const auto bar = dac::admissible_delay(sys);
    const double hi = bar ? *bar : 4.0 * opt.tau_star;
    double best_tau = 0.0, best = sys.rho0();
    for (int i = 1; i < 4000; ++i) {
      const double tau = hi * i / 4000.0;
      const double r = dac::decay_rate(sys, tau).value;
      if (r > best) {
        best = r;
        best_tau = tau;
      }
    }
    // grid refinement around the peak: the maximum sits on a square-root
    // cusp, so a single dense scan cannot resolve the value to 1e-6
    double width = hi / 4000.0;
    for (int round = 0; round < 12; ++round) {
      const double lo_tau = std::max(1e-12, best_tau - width);
      for (int i = 0; i <= 80; ++i) {
        const double tau = lo_tau + (2.0 * width) * i / 80.0;
        const double r = dac::decay_rate(sys, tau).value;
        if (r > best) {
          best = r;
          best_tau = tau;
        }
      }
      width /= 20.0;
    }
    CHECK(opt.tau_star == doctest::Approx(best_tau).epsilon(2e-3));
    CHECK(opt.rho_star == doctest::Approx(best).epsilon(1e-6));
    CHECK(opt.rho_star > sys.rho0());
    CHECK(dac::decay_rate(sys, opt.tau_star * 0.98).value < opt.rho_star);
    CHECK(dac::decay_rate(sys, opt.tau_star * 1.02).value < opt.rho_star);
  }
  CHECK_THROWS_AS((void)dac::optimal_delay(ScalarSystem(1.0, -2.0)),
                  std::domain_error);
}

TEST_CASE("rate-gain window brackets the delay-free rate") {
  for (const ScalarSystem& sys :
       {ScalarSystem(-3.0, 1.0), ScalarSystem(-2.0, 0.0),
        ScalarSystem(-1.0, -0.7)}) {
    const double tt = dac::rate_gain_window(sys);
    CHECK(tt > 0.0);
    CHECK(dac::decay_rate(sys, tt * (1.0 - 1e-3)).value > sys.rho0());
    CHECK(dac::decay_rate(sys, tt * (1.0 + 1e-3)).value < sys.rho0());
    CHECK(dac::optimal_delay(sys).tau_star < tt);
  }
  CHECK_THROWS_AS((void)dac::rate_gain_window(ScalarSystem(0.5, -1.0)),
                  std::domain_error);
}

TEST_CASE("report aggregates the landmarks consistently") {
  const ScalarSystem sys(-3.0, 1.0);
  const auto rep = dac::scalar_rate_report(sys, {0.0, 0.1, 0.2});
  REQUIRE(rep.tau_bar);
  REQUIRE(rep.tau_star);
  REQUIRE(rep.tau_tilde);
  CHECK(*rep.tau_star < *rep.tau_tilde);
  CHECK(*rep.tau_tilde < *rep.tau_bar);
  CHECK(rep.rho_at.at(0.0) == doctest::Approx(sys.rho0()));
  CHECK(rep.rho_at.at(0.1) ==
        doctest::Approx(dac::decay_rate(sys, 0.1).value));
}

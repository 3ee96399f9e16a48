#include <cmath>
#include <stdexcept>

#include "dac/delay_gain.hpp"
#include "dac/lambert_w.hpp"
#include "doctest.h"

using dac::critical_x;
using dac::gain;
using dac::gain_landmarks;
using dac::peak_x;
using dac::unity_crossing_x;

namespace {
const double kE = std::exp(1.0);
}

TEST_CASE("gain is 1 at x = 0 and continuous there") {
  for (double gamma : {-0.9, -0.3, 0.0, 0.4, 0.9}) {
    CHECK(gain(gamma, 0.0) == 1.0);
    CHECK(gain(gamma, -1e-9) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(gain(gamma, 1e-9) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("gamma = 0 peak is (x, g) = (-1/e, e)") {
  const auto p = peak_x(0.0);
  CHECK(p.x_star == doctest::Approx(-1.0 / kE).epsilon(1e-12));
  CHECK(p.g_max == doctest::Approx(kE).epsilon(1e-12));
  CHECK(gain(0.0, -1.0 / kE) == doctest::Approx(kE).epsilon(1e-9));
}

TEST_CASE("stability boundary location and zero of the gain") {
  for (double gamma : {-0.95, -0.5, 0.0, 0.5, 0.95}) {
    const auto xb = critical_x(gamma);
    REQUIRE(xb.has_value());
    CHECK(*xb ==
          doctest::Approx(-std::acos(gamma) / std::sqrt(1 - gamma * gamma))
              .epsilon(1e-12));
    CHECK(*xb < 0.0);
    // the rescaled rate vanishes at the boundary: g + gamma-term balance
    CHECK(gain(gamma, *xb) * *xb + -gamma * *xb ==
          doctest::Approx(0.0).epsilon(1e-7));
  }
  CHECK_FALSE(critical_x(1.0).has_value());
  CHECK_FALSE(critical_x(-1.0).has_value());
  CHECK_FALSE(critical_x(-1.5).has_value());
}

TEST_CASE("landmark ordering x_bar < x_tilde < x_star < 0") {
  for (double gamma : {-2.0, -0.9, -0.3, 0.0, 1.0 / 3.0, 0.8}) {
    const auto lm = gain_landmarks(gamma);
    if (lm.x_bar) {
      CHECK(*lm.x_bar < lm.x_tilde);
    }
    CHECK(lm.x_tilde < lm.x_star);
    CHECK(lm.x_star < 0.0);
    CHECK(lm.g_max > 1.0);
    CHECK(gain(gamma, lm.x_star) == doctest::Approx(lm.g_max).epsilon(1e-9));
    CHECK(gain(gamma, lm.x_tilde) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("gain exceeds 1 exactly between the unity crossing and 0") {
  for (double gamma : {-0.7, 0.0, 1.0 / 3.0, 0.6}) {
    const double xt = unity_crossing_x(gamma);
    for (double f : {0.05, 0.3, 0.6, 0.95})
      CHECK(gain(gamma, f * xt) > 1.0);
    const auto xb = critical_x(gamma);
    const double left = xb ? *xb : 2.0 * xt;
    for (double f : {0.2, 0.6, 0.9})
      CHECK(gain(gamma, xt + f * (left - xt)) < 1.0);
  }
}

TEST_CASE("gain rises to its peak and falls beyond it") {
  for (double gamma : {-0.5, 0.0, 0.4}) {
    const auto lm = gain_landmarks(gamma);
    // from 0- toward x_star the gain increases as |x| grows
    double prev = 1.0;
    for (int i = 1; i <= 20; ++i) {
      const double g = gain(gamma, lm.x_star * i / 20.0);
      CHECK(g >= prev - 1e-12);
      prev = g;
    }
    // beyond the peak toward the boundary it decreases
    const double left = lm.x_bar ? *lm.x_bar : 3.0 * lm.x_star;
    prev = lm.g_max;
    for (int i = 1; i <= 20; ++i) {
      const double g = gain(gamma, lm.x_star + (left - lm.x_star) * i / 20.5);
      CHECK(g <= prev + 1e-12);
      prev = g;
    }
  }
}

TEST_CASE("peak formula cross-checks the Lambert route") {
  for (double gamma : {-1.2, -0.4, 0.25, 0.7}) {
    const auto p = peak_x(gamma);
    if (gamma != 0.0) {
      const double w = dac::lambert_w(0, -gamma / kE).real();
      CHECK(p.x_star == doctest::Approx(w / gamma).epsilon(1e-12));
      CHECK(p.g_max == doctest::Approx(-gamma / w).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS((void)peak_x(1.0), std::domain_error);
  CHECK_THROWS_AS((void)unity_crossing_x(1.3), std::domain_error);
}

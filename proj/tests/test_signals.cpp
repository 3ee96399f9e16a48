#include <cmath>
#include <stdexcept>
#include <vector>

#include "dac/reference_signal.hpp"
#include "doctest.h"

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("signals are one-sided") {
  dac::StaticReference st({1.0, 2.0});
  CHECK(st.value(0, -0.1) == 0.0);
  CHECK(st.value(1, 3.0) == 2.0);
  CHECK(st.disagreement_derivative_bound() == 0.0);
  CHECK(st.average(1.0) == doctest::Approx(1.5));

  dac::SinusoidReference sin({0.0, 0.0}, {1.0, 1.0}, 2.0, {0.0, kPi / 3});
  CHECK(sin.value(0, -1e-9) == 0.0);
  dac::ZohSampledReference zoh({1.0}, {0.0}, 2.0, 3.0, 9);
  CHECK(zoh.value(0, -0.2) == 0.0);
}

TEST_CASE("sinusoid derivative bound is the exact centered sup") {
  dac::SinusoidReference ref({0.2, -0.1, 0.4}, {1.1, 0.8, 1.3}, 1.7,
                             {0.0, 1.0, 2.2});
  const double gamma = ref.disagreement_derivative_bound();
  double sup = 0.0;
  const int n = ref.agents();
  for (int i = 0; i <= 20000; ++i) {
    const double t = i * (2.0 * kPi / 1.7) / 20000.0;
    std::vector<double> d(n);
    double m = 0.0;
    for (int a = 0; a < n; ++a) {
      d[a] = ref.derivative(a, t);
      m += d[a];
    }
    m /= n;
    double s = 0.0;
    for (int a = 0; a < n; ++a) s += (d[a] - m) * (d[a] - m);
    sup = std::max(sup, std::sqrt(s));
  }
  CHECK(sup <= gamma * (1.0 + 1e-9));
  CHECK(sup >= gamma * (1.0 - 1e-6));
}

TEST_CASE("held samples: determinism, left continuity, hold semantics") {
  const std::vector<double> amps = {1.1, 1.0, 0.9, 1.05, 0.96};
  const std::vector<double> biases = {-0.55, 1.0, 0.6, -0.9, -0.6};
  dac::ZohSampledReference a(amps, biases, 2.0, 5.0, 42);
  dac::ZohSampledReference b(amps, biases, 2.0, 5.0, 42);
  dac::ZohSampledReference c(amps, biases, 2.0, 5.0, 43);
  bool differs = false;
  for (double t : {0.0, 0.3, 0.9, 1.6, 2.5, 4.9}) {
    for (int i = 0; i < 5; ++i) {
      CHECK(a.value(i, t) == b.value(i, t));
      if (a.value(i, t) != c.value(i, t)) differs = true;
    }
  }
  CHECK(differs);

  CHECK(a.piecewise_constant());
  CHECK(a.derivative(2, 1.3) == 0.0);
  // constant within an epoch, left-continuous at its close
  CHECK(a.value(0, 0.1) == a.value(0, 0.49));
  CHECK(a.value(0, 0.5) == a.value(0, 0.1));
  CHECK(a.value(0, 0.5 + 1e-9) != a.value(0, 0.5 - 1e-9));
  // the hold shape scales and shifts per agent
  const double base = (a.value(0, 0.2) + 0.55) / 1.1;
  CHECK(a.value(1, 0.2) == doctest::Approx(base + 1.0).epsilon(1e-12));
  CHECK(base > 1.0);  // 2 + sin(...) is positive and near 2
  CHECK(base < 3.0);
}

TEST_CASE("signal construction validates shapes") {
  CHECK_THROWS_AS(dac::StaticReference({}), std::invalid_argument);
  CHECK_THROWS_AS(dac::SinusoidReference({1.0}, {1.0, 2.0}, 1.0, {0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(dac::ZohSampledReference({1.0}, {0.0}, -2.0, 5.0, 1),
                  std::invalid_argument);
}

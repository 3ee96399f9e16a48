#include "dac/scalar_delay.hpp"

#include <cmath>
#include <stdexcept>

#include "dac/delay_gain.hpp"
#include "dac/lambert_w.hpp"

namespace dac {

ScalarSystem::ScalarSystem(double a_, double b_) : a(a_), b(b_) {
  if (a == 0.0) throw std::invalid_argument("ScalarSystem: a must be nonzero");
  if (!(a + b < 0.0))
    throw std::invalid_argument("ScalarSystem: requires a + b < 0");
}

std::optional<double> admissible_delay(const ScalarSystem& sys) {
  if (sys.b <= -std::abs(sys.a)) return std::nullopt;
  // a + b < 0 leaves a < -|b| as the only other case.
  return std::acos(-sys.b / sys.a) / std::sqrt(sys.a * sys.a - sys.b * sys.b);
}

DecayRate decay_rate(const ScalarSystem& sys, double tau) {
  if (tau < 0.0) throw std::invalid_argument("decay_rate: tau must be >= 0");
  const auto bar = admissible_delay(sys);
  const bool stable = !bar || tau < *bar;  // open interval at tau_bar
  if (tau == 0.0) return {sys.rho0(), stable};
  const double z = sys.a * tau * std::exp(-tau * sys.b);
  const double rho = -lambert_w(0, z).real() / tau - sys.b;
  return {rho, stable};
}

OptimalDelay optimal_delay(const ScalarSystem& sys) {
  if (sys.a > 0.0)
    throw std::domain_error("optimal_delay: no acceleration for a > 0");
  if (sys.b == 0.0) {
    const double e = std::exp(1.0);
    return {-1.0 / (sys.a * e), -sys.a * e};
  }
  const double w = lambert_w(0, sys.b / (sys.a * std::exp(1.0))).real();
  return {-w / sys.b, -(1.0 + 1.0 / w) * sys.b};
}

double rate_gain_window(const ScalarSystem& sys) {
  if (sys.a > 0.0)
    throw std::domain_error("rate_gain_window: no acceleration for a > 0");
  return unity_crossing_x(sys.gamma()) / sys.a;
}

ScalarRateReport scalar_rate_report(const ScalarSystem& sys,
                                    const std::vector<double>& taus) {
  ScalarRateReport report;
  report.tau_bar = admissible_delay(sys);
  if (sys.a < 0.0) {
    report.tau_tilde = rate_gain_window(sys);
    const auto opt = optimal_delay(sys);
    report.tau_star = opt.tau_star;
    report.rho_star = opt.rho_star;
  }
  for (double tau : taus) report.rho_at[tau] = decay_rate(sys, tau).value;
  return report;
}

}  // namespace dac

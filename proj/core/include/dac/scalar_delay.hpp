#pragma once

#include <map>
#include <optional>
#include <vector>

namespace dac {

/// The scalar delayed system xdot(t) = a*x(t - tau) + b*x(t), with the
/// standing assumption a + b < 0 (stable at zero delay) and a != 0.
struct ScalarSystem {
  double a;  // delayed-term coefficient
  double b;  // instantaneous coefficient

  ScalarSystem(double a_, double b_);

  double gamma() const { return -b / a; }
  double rho0() const { return -(a + b); }
};

/// Critical delay bound: the system is exponentially stable iff
/// tau in [0, tau_bar). nullopt = stable for every delay (b <= -|a|).
std::optional<double> admissible_delay(const ScalarSystem& sys);

struct DecayRate {
  double value;  // -Re of the rightmost characteristic root (can be <= 0)
  bool stable;   // tau inside the admissible range
};

/// Exact decay rate at delay tau via the principal Lambert W branch:
///   rho_tau = -(1/tau) Re{W_0(a tau e^{-tau b})} - b,  rho_0 = -(a+b).
DecayRate decay_rate(const ScalarSystem& sys, double tau);

struct OptimalDelay {
  double tau_star;
  double rho_star;
};

/// Rate-maximizing delay for a < 0:
///   tau* = -(1/b) W_0(b/(a e)), rho* = -(1 + 1/W_0(b/(a e))) b,
/// with the b = 0 limit (-1/(a e), -a e).
/// Throws std::domain_error for a > 0 (delay only degrades the rate).
OptimalDelay optimal_delay(const ScalarSystem& sys);

/// tau_tilde: the delay below which the rate strictly beats the delay-free
/// rate (unique solution of g(gamma, a*tau) = 1). Requires a < 0.
double rate_gain_window(const ScalarSystem& sys);

struct ScalarRateReport {
  std::optional<double> tau_bar;    // nullopt = unbounded
  std::optional<double> tau_tilde;  // nullopt when a > 0
  std::optional<double> tau_star;
  std::optional<double> rho_star;
  std::map<double, double> rho_at;
};

ScalarRateReport scalar_rate_report(const ScalarSystem& sys,
                                    const std::vector<double>& taus);

}  // namespace dac

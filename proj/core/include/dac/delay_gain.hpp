#pragma once

#include <optional>

namespace dac {

/// g(gamma, x) = Re{ W_0(x * exp(gamma*x)) } / x, with g(gamma, 0) = 1.
/// The factor by which delay rescales the decay rate of a scalar delayed
/// mode; g > 1 means the delay accelerates the mode.
double gain(double gamma, double x);

/// Stability boundary in x for gamma in (-1, 1):
///   x_bar = -arccos(gamma) / sqrt(1 - gamma^2).
/// nullopt when |gamma| >= 1 (no finite boundary on x < 0).
std::optional<double> critical_x(double gamma);

struct GainPeak {
  double x_star;  // location of the maximum of g on x < 0
  double g_max;
};

/// Peak of g for gamma < 1: x* = W_0(-gamma/e)/gamma and
/// g_max = -gamma / W_0(-gamma/e); the gamma = 0 limit is (-1/e, e).
/// Throws std::domain_error for gamma >= 1.
GainPeak peak_x(double gamma);

/// The unique x_tilde in (x_bar, x_star) with g(gamma, x_tilde) = 1, found
/// by bisection on the monotone segment. g > 1 exactly on (x_tilde, 0).
/// Throws std::domain_error for gamma >= 1.
double unity_crossing_x(double gamma);

struct GainLandmarks {
  std::optional<double> x_bar;  // nullopt = unbounded
  double x_star;
  double x_tilde;
  double g_max;
};

GainLandmarks gain_landmarks(double gamma);

}  // namespace dac

#include "dac/delay_gain.hpp"

#include <cmath>
#include <stdexcept>

#include "dac/lambert_w.hpp"
#include "dac/rootfind.hpp"

namespace dac {

double gain(double gamma, double x) {
  if (!std::isfinite(gamma) || !std::isfinite(x))
    throw std::domain_error("gain: non-finite argument");
  if (x == 0.0) return 1.0;
  const double z = x * std::exp(gamma * x);
  return lambert_w(0, z).real() / x;
}

std::optional<double> critical_x(double gamma) {
  if (!std::isfinite(gamma)) throw std::domain_error("critical_x: non-finite gamma");
  if (gamma >= 1.0 || gamma <= -1.0) return std::nullopt;
  return -std::acos(gamma) / std::sqrt(1.0 - gamma * gamma);
}

GainPeak peak_x(double gamma) {
  if (!(gamma < 1.0)) throw std::domain_error("peak_x: requires gamma < 1");
  if (gamma == 0.0) {
    const double e = std::exp(1.0);
    return {-1.0 / e, e};
  }
  const double w = lambert_w(0, -gamma / std::exp(1.0)).real();
  return {w / gamma, -gamma / w};
}

double unity_crossing_x(double gamma) {
  if (!(gamma < 1.0)) throw std::domain_error("unity_crossing_x: requires gamma < 1");
  const auto peak = peak_x(gamma);

  // Bracket the g = 1 crossing on the increasing segment left of the peak.
  // For |gamma| < 1 the stability boundary x_bar has g = gamma < 1; for
  // gamma <= -1 the segment is unbounded and g -> gamma as x -> -inf, so
  // step left until g drops below 1.
  double lo;
  const auto xb = critical_x(gamma);
  if (xb) {
    lo = *xb + 1e-13 * std::abs(*xb);
    // Nudge inward until g is defined below 1 (roundoff at the boundary).
    while (gain(gamma, lo) >= 1.0) lo = 0.5 * (lo + peak.x_star);
  } else {
    lo = peak.x_star;
    double width = std::abs(peak.x_star) + 1.0;
    do {
      lo -= width;
      width *= 2.0;
    } while (gain(gamma, lo) >= 1.0);
  }

  return bisect([gamma](double x) { return gain(gamma, x) - 1.0; }, lo, peak.x_star);
}

GainLandmarks gain_landmarks(double gamma) {
  const auto peak = peak_x(gamma);
  return {critical_x(gamma), peak.x_star, unity_crossing_x(gamma), peak.g_max};
}

}  // namespace dac

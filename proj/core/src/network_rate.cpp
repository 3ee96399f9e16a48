#include "dac/network_rate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "dac/delay_gain.hpp"
#include "dac/lambert_w.hpp"
#include "dac/rootfind.hpp"
#include "dac/scalar_delay.hpp"

namespace dac {
namespace {

// Mode i of the transformed dynamics is the scalar delayed system with
// a = -alpha k lambda_i and b = -alpha (1-k) lambda_i.
ScalarSystem mode_system(double lambda, double alpha, double k) {
  return ScalarSystem(-alpha * k * lambda, -alpha * (1.0 - k) * lambda);
}

void require_positive_k(double k, const char* who) {
  if (!(k > 0.0)) throw std::domain_error(std::string(who) + ": requires k > 0");
}

}  // namespace

void ConsensusParams::validate() const {
  if (!(alpha > 0.0))
    throw std::invalid_argument("ConsensusParams: alpha must be positive");
  if (!(tau >= 0.0))
    throw std::invalid_argument("ConsensusParams: tau must be >= 0");
}

std::vector<double> disagreement_modes(const Spectrum& spec) {
  if (!spec.connected())
    throw std::domain_error("disagreement_modes: graph is not connected");
  std::vector<double> modes;
  const double tol = 1e-9 * std::max(1.0, spec.lambda_max());
  for (int i = 1; i < spec.size(); ++i) {
    const double lam = spec.eigenvalue(i);
    if (modes.empty() || lam - modes.back() > tol) modes.push_back(lam);
  }
  return modes;
}

double mode_rate(double lambda, double alpha, double k, double tau) {
  if (k == 0.0 || tau == 0.0) return alpha * lambda;
  const double gamma = 1.0 - 1.0 / k;
  return (k * gain(gamma, -k * lambda * alpha * tau) + (1.0 - k)) * alpha * lambda;
}

double mode_rate_lambert(double lambda, double alpha, double k, double tau) {
  if (k == 0.0 || tau == 0.0) return alpha * lambda;
  const double z = -alpha * k * lambda * tau * std::exp(alpha * (1.0 - k) * lambda * tau);
  return alpha * (1.0 - k) * lambda - lambert_w(0, z).real() / tau;
}

std::optional<double> mode_admissible_delay(double lambda, double alpha, double k) {
  if (k == 0.0) return std::nullopt;  // delay inert
  return admissible_delay(mode_system(lambda, alpha, k));
}

double mode_peak_delay(double lambda, double alpha, double k) {
  require_positive_k(k, "mode_peak_delay");
  return optimal_delay(mode_system(lambda, alpha, k)).tau_star;
}

double mode_unity_delay(double lambda, double alpha, double k) {
  require_positive_k(k, "mode_unity_delay");
  return rate_gain_window(mode_system(lambda, alpha, k));
}

double mode_rate_crossing(double lambda, double alpha, double k, double rho0) {
  require_positive_k(k, "mode_rate_crossing");
  const double tau_star = mode_peak_delay(lambda, alpha, k);
  const auto tau_bar = mode_admissible_delay(lambda, alpha, k);

  auto f = [&](double tau) { return mode_rate(lambda, alpha, k, tau) - rho0; };
  if (!(f(tau_star) > 0.0))
    throw std::domain_error("mode_rate_crossing: peak rate does not exceed rho0");

  double hi;
  if (tau_bar) {
    hi = *tau_bar * (1.0 - 1e-12);
  } else {
    // k <= 0.5: rate decays to zero as tau grows, so a crossing exists.
    hi = tau_star;
    double width = tau_star + 1.0;
    do {
      hi += width;
      width *= 2.0;
    } while (f(hi) >= 0.0);
  }
  return bisect(f, tau_star, hi);
}

std::optional<double> admissible_delay_network(const Spectrum& spec,
                                               const ConsensusParams& p) {
  p.validate();
  const auto modes = disagreement_modes(spec);
  if (p.k == 0.0 || p.k <= 0.5) return std::nullopt;
  // min over modes = the lambda_N bound.
  return mode_admissible_delay(modes.back(), p.alpha, p.k);
}

double convergence_rate(const Spectrum& spec, const ConsensusParams& p) {
  p.validate();
  const auto modes = disagreement_modes(spec);
  double rho = std::numeric_limits<double>::infinity();
  for (double lam : modes)
    rho = std::min(rho, mode_rate(lam, p.alpha, p.k, p.tau));
  return rho;
}

double rate_increase_window(const Spectrum& spec, double alpha, double k) {
  require_positive_k(k, "rate_increase_window");
  const auto modes = disagreement_modes(spec);
  const double rho0 = alpha * modes.front();
  double tau_hat = std::numeric_limits<double>::infinity();
  for (double lam : modes)
    tau_hat = std::min(tau_hat, mode_rate_crossing(lam, alpha, k, rho0));
  return tau_hat;
}

NetworkOptimum optimal_network_delay(const Spectrum& spec, double alpha, double k) {
  require_positive_k(k, "optimal_network_delay");
  const auto modes = disagreement_modes(spec);

  const double lo = mode_peak_delay(modes.back(), alpha, k);
  const double hi =
      std::min(mode_peak_delay(modes.front(), alpha, k),
               rate_increase_window(spec, alpha, k));

  auto rate = [&](double tau) {
    double r = std::numeric_limits<double>::infinity();
    for (double lam : modes) r = std::min(r, mode_rate(lam, alpha, k, tau));
    return r;
  };

  if (hi <= lo) return {lo, rate(lo)};

  // The min of per-mode unimodal curves has a kink where the active mode
  // switches; scan densely first, then refine around the best cell.
  const int scan_points = 2000;
  int best = 0;
  double best_rate = -std::numeric_limits<double>::infinity();
  const double step = (hi - lo) / (scan_points - 1);
  for (int i = 0; i < scan_points; ++i) {
    const double r = rate(lo + i * step);
    if (r > best_rate) {
      best_rate = r;
      best = i;
    }
  }
  const double a = lo + std::max(0, best - 1) * step;
  const double b = lo + std::min(scan_points - 1, best + 1) * step;
  const double tau_star = golden_max(rate, a, b);
  return {tau_star, rate(tau_star)};
}

double ultimate_rate_bound(double k, double rho0) {
  require_positive_k(k, "ultimate_rate_bound");
  if (k == 1.0) return std::exp(1.0) * rho0;
  const double w = lambert_w(0, (1.0 - k) / (k * std::exp(1.0))).real();
  return (1.0 - k) * (1.0 + 1.0 / w) * rho0;
}

RateProfile rate_profile(const Spectrum& spec, const ConsensusParams& p) {
  p.validate();
  RateProfile out;
  out.mode_lambdas = disagreement_modes(spec);
  out.rho0 = p.alpha * out.mode_lambdas.front();
  out.rho_tau = std::numeric_limits<double>::infinity();
  for (double lam : out.mode_lambdas) {
    out.per_mode.push_back(mode_rate(lam, p.alpha, p.k, p.tau));
    out.rho_tau = std::min(out.rho_tau, out.per_mode.back());
  }
  out.tau_bar = admissible_delay_network(spec, p);
  if (p.k > 0.0) {
    out.tau_hat = rate_increase_window(spec, p.alpha, p.k);
    const auto opt = optimal_network_delay(spec, p.alpha, p.k);
    out.tau_star = opt.tau_star;
    out.rho_star = opt.rho_star;
    out.ultimate_bound = ultimate_rate_bound(p.k, out.rho0);
  }
  return out;
}

std::vector<SplitRow> split_factor_report(const Spectrum& spec, double alpha,
                                          const std::vector<double>& k_grid) {
  std::vector<SplitRow> rows;
  for (double k : k_grid) {
    SplitRow row;
    row.k = k;
    row.effort_safe = k > 0.0 && k <= 1.0;
    if (k == 0.0) {
      row.delay_inert = true;
    } else {
      ConsensusParams p{alpha, k, 0.0};
      row.tau_bar = admissible_delay_network(spec, p);
      if (k > 0.0) {
        row.tau_hat = rate_increase_window(spec, alpha, k);
        const auto opt = optimal_network_delay(spec, alpha, k);
        row.tau_star = opt.tau_star;
        row.rho_star = opt.rho_star;
        row.ultimate_bound = ultimate_rate_bound(k, alpha * spec.lambda2());
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dac

#pragma once

#include <optional>
#include <vector>

#include "dac/spectrum.hpp"

namespace dac {

/// Parameters of the split-feedback consensus dynamics
///   xdot = -alpha (1-k) L x(t) - alpha k L x(t - tau) + rdot.
struct ConsensusParams {
  double alpha = 1.0;  // gain, > 0
  double k = 0.0;      // split factor (weight of the outdated feedback)
  double tau = 0.0;    // delay, seconds, >= 0

  void validate() const;
};

struct RateProfile {
  double rho0;                          // alpha * lambda2
  std::vector<double> mode_lambdas;     // distinct lambda_i, i >= 2
  std::vector<double> per_mode;         // rho_{tau,i} per distinct mode
  double rho_tau;                       // min over modes
  std::optional<double> tau_bar;        // nullopt = unbounded
  std::optional<double> tau_hat;        // nullopt when k <= 0
  std::optional<double> tau_star;
  std::optional<double> rho_star;
  std::optional<double> ultimate_bound;
};

/// Distinct nonzero Laplacian eigenvalues (the modes that carry
/// disagreement dynamics). Throws if the graph is disconnected.
std::vector<double> disagreement_modes(const Spectrum& spec);

/// Rate of the lambda-mode at delay tau, split factor k:
///   rho_{tau,i} = (k g(1 - 1/k, -k lambda alpha tau) + (1-k)) alpha lambda.
double mode_rate(double lambda, double alpha, double k, double tau);

/// Same rate via the direct Lambert form
///   alpha (1-k) lambda - Re{W_0(-alpha k lambda tau e^{alpha(1-k)lambda tau})}/tau;
/// kept as an algebraically independent route for cross-checks.
double mode_rate_lambert(double lambda, double alpha, double k, double tau);

std::optional<double> mode_admissible_delay(double lambda, double alpha, double k);
double mode_peak_delay(double lambda, double alpha, double k);   // tau*_i, k > 0
double mode_unity_delay(double lambda, double alpha, double k);  // tau~_i, k > 0
/// tau^_i: where rho_{tau,i} crosses rho0 on its decreasing segment.
double mode_rate_crossing(double lambda, double alpha, double k, double rho0);

/// Critical network delay bound; nullopt = internally stable for any tau
/// (k <= 0.5). For k > 0.5:
///   tau_bar = arccos(1 - 1/k) / (alpha lambda_N sqrt(2k - 1)).
std::optional<double> admissible_delay_network(const Spectrum& spec,
                                               const ConsensusParams& p);

/// Network rate rho_tau(k) = min over modes of rho_{tau,i}.
double convergence_rate(const Spectrum& spec, const ConsensusParams& p);

/// tau^ = min{tau^_i}: rho_tau > rho0 exactly for tau in (0, tau^).
/// Requires k > 0.
double rate_increase_window(const Spectrum& spec, double alpha, double k);

struct NetworkOptimum {
  double tau_star;
  double rho_star;
};

/// Rate-maximizing delay, located inside the bracket
/// [tau*_N, min(tau*_2, tau^)] by a dense pre-scan plus golden-section
/// refinement of the min-mode rate. Requires k > 0.
NetworkOptimum optimal_network_delay(const Spectrum& spec, double alpha, double k);

/// (1-k)(1 + 1/W_0((1-k)/(k e))) rho0, with the k = 1 limit e*rho0.
/// Requires k > 0.
double ultimate_rate_bound(double k, double rho0);

RateProfile rate_profile(const Spectrum& spec, const ConsensusParams& p);

struct SplitRow {
  double k;
  bool delay_inert = false;             // k = 0: tau has no effect
  std::optional<double> tau_bar;        // nullopt = unbounded
  std::optional<double> tau_hat;        // nullopt = not applicable (k <= 0)
  std::optional<double> tau_star;
  std::optional<double> rho_star;
  std::optional<double> ultimate_bound;
  bool effort_safe = false;             // k in (0, 1]
};

std::vector<SplitRow> split_factor_report(const Spectrum& spec, double alpha,
                                          const std::vector<double>& k_grid);

}  // namespace dac

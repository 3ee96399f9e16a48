#pragma once

#include <iosfwd>
#include <vector>

#include "dac/graph.hpp"
#include "dac/network_rate.hpp"
#include "dac/reference_signal.hpp"
#include "dac/spectrum.hpp"

namespace dac {

/// Fixed-grid record of a delayed consensus run. The grid covers
/// [-tau, horizon] with step dt; dt divides tau exactly, so index
/// history_steps is t = 0 and delayed lookups land on nodes.
struct Trajectory {
  ConsensusParams params;
  double dt = 0.0;
  int history_steps = 0;  // index of t = 0
  std::vector<double> times;
  std::vector<std::vector<double>> states;    // agent vector per node
  std::vector<std::vector<double>> controls;  // u(t) per node (0 on history)
  std::vector<double> ref_avg;                // running reference average
  bool flagged_divergent = false;

  int agents() const { return states.empty() ? 0 : (int)states.front().size(); }
  int steps() const { return static_cast<int>(times.size()); }
};

/// Integrates xdot = -alpha(1-k) L x(t) - alpha k L x(t - tau) + rdot with
/// history x(0) = r(0), x = 0 on [-tau, 0). RK4 over steps of h = tau/M,
/// M = ceil(tau/dt_max); delayed stage values use cubic Hermite interpolation
/// of the stored nodes. Delays past the stability bound run anyway but are
/// flagged divergent.
Trajectory simulate(const Graph& g, const ConsensusParams& p,
                    const ReferenceSignal& ref, double horizon, double dt_max);

/// Same dynamics integrated through y = x - r, which removes the rdot term;
/// useful when the reference derivative is unavailable.
Trajectory simulate_derivative_free(const Graph& g, const ConsensusParams& p,
                                    const ReferenceSignal& ref, double horizon,
                                    double dt_max);

/// Autonomous run from x(0) = x0 (zero history, no reference).
Trajectory zero_input_simulate(const Graph& g, const ConsensusParams& p,
                               const std::vector<double>& x0, double horizon,
                               double dt_max);

/// sup over recorded steps of the max-magnitude control entry.
double control_effort(const Trajectory& traj);

/// Per-node max_i |x_i(t) - r_avg(t)| for t >= 0.
std::vector<double> tracking_error(const Trajectory& traj);

/// Empirical decay rate: least-squares slope of the log disagreement norm,
/// fitted over local maxima in the final 60% of the window before the norm
/// falls below 1e-12 of its initial value (all samples there if fewer than
/// four maxima exist). Throws if fewer than four usable points remain.
double estimate_decay_rate(const Trajectory& traj);

/// Exact solution of the scalar mode zdot = -alpha(1-k) lambda z(t)
/// - alpha k lambda z(t - tau) with z = 0 on [-tau, 0), z(0) = z0,
/// valid piecewise on [-tau, 2*tau]. Throws outside that range.
double modal_closed_form(double lambda, const ConsensusParams& p, double z0,
                         double t);

/// Characteristic-root series for the zero-input modal system: per mode,
/// sum over branches |j| <= J of e^{S_j t} C_j z0_i with
///   S_j = W_j(-alpha k lambda tau e^{alpha(1-k) lambda tau})/tau
///         - alpha(1-k) lambda,
///   C_j = 1/(1 - alpha k lambda tau e^{-S_j tau}).
/// z0 holds the disagreement modal coordinates (length N-1, aligned with
/// eigenvalues 2..N). Branch terms with a vanishing C_j denominator are
/// skipped with a diagnostic on stderr.
std::vector<double> series_solution(const Spectrum& spec,
                                    const ConsensusParams& p,
                                    const std::vector<double>& z0, double t,
                                    int J);

/// CSV export: header t,x_1..x_N,u_1..u_N,r_avg,err; rows for t >= 0 at
/// 14 significant digits.
void write_csv(const Trajectory& traj, std::ostream& out);
void write_csv(const Trajectory& traj, const std::string& path);

}  // namespace dac

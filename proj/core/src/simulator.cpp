#include "dac/simulator.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "dac/lambert_w.hpp"

namespace dac {
namespace {

std::vector<double> axpy(const std::vector<double>& s, double c,
                         const std::vector<double>& d) {
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] + c * d[i];
  return out;
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / v.size();
}

class Integrator {
 public:
  Integrator(const Graph& g, const ConsensusParams& p,
             const ReferenceSignal* ref, const std::vector<double>* x0,
             double horizon, double dt_max, bool derivative_free)
      : L_(laplacian(g)),
        p_(p),
        ref_(ref),
        derivative_free_(derivative_free),
        n_(g.size()) {
    p_.validate();
    if (!(dt_max > 0.0))
      throw std::invalid_argument("simulate: dt_max must be positive");
    if (!(horizon > 0.0))
      throw std::invalid_argument("simulate: horizon must be positive");
    if (ref_ && ref_->agents() != n_)
      throw std::invalid_argument("simulate: reference/graph size mismatch");
    if (x0 && static_cast<int>(x0->size()) != n_)
      throw std::invalid_argument("simulate: x0/graph size mismatch");

    pw_ = ref_ && ref_->piecewise_constant();
    if (p_.tau > 0.0) {
      M_ = static_cast<int>(std::ceil(p_.tau / dt_max - 1e-12));
      h_ = p_.tau / M_;
    } else {
      M_ = 0;
      h_ = horizon / std::ceil(horizon / dt_max - 1e-12);
    }
    steps_ = static_cast<int>(std::ceil(horizon / h_ - 1e-9));

    traj_.params = p_;
    traj_.dt = h_;
    traj_.history_steps = M_;

    const auto bar = admissible_delay_network(spectrum(g), p_);
    if (bar && p_.tau >= *bar) {
      traj_.flagged_divergent = true;
      std::cerr << "simulate: tau = " << p_.tau
                << " is at or beyond the stability bound " << *bar << "\n";
    }

    run(x0);
  }

  Trajectory take() { return std::move(traj_); }

 private:
  std::vector<double> ref_values(double t) const {
    std::vector<double> r(n_, 0.0);
    if (!ref_) return r;
    for (int i = 0; i < n_; ++i) {
      r[i] = ref_->value(i, t);
      if (!std::isfinite(r[i]))
        throw std::invalid_argument("simulate: non-finite reference value");
    }
    return r;
  }

  // Held/right-limit reference at a node: sample-and-hold signals are
  // left-continuous, so probe half a step into the interval.
  std::vector<double> ref_right(double t) const {
    return ref_values(pw_ ? t + 0.5 * h_ : t);
  }

  std::vector<double> ref_slope(double t) const {
    std::vector<double> r(n_, 0.0);
    if (ref_ && !pw_)
      for (int i = 0; i < n_; ++i) r[i] = ref_->derivative(i, t);
    return r;
  }

  // x(td) from the recorded grid; exact on nodes, cubic Hermite between
  // them, identically zero on the pre-start history. The state jumps at
  // t = 0 (and at sampling instants for held references), so node hits
  // resolve to the left limit when the lookup closes an RK step and to
  // the right limit when it opens one.
  std::vector<double> delayed(double td, bool left_limit) const {
    if (td < -1e-9 * h_) return std::vector<double>(n_, 0.0);
    const double pos = td / h_ + M_;
    int j = static_cast<int>(std::floor(pos + 1e-9));
    const double th = pos - j;
    if (th < 1e-9) return left_limit ? pre_[j] : traj_.states[j];
    const double h00 = (1 + 2 * th) * (1 - th) * (1 - th);
    const double h10 = th * (1 - th) * (1 - th);
    const double h01 = th * th * (3 - 2 * th);
    const double h11 = th * th * (th - 1);
    std::vector<double> out(n_);
    for (int i = 0; i < n_; ++i)
      out[i] = h00 * traj_.states[j][i] + h_ * h10 * xdot_[j][i] +
               h01 * pre_[j + 1][i] + h_ * h11 * xdot_pre_[j + 1][i];
    return out;
  }

  std::vector<double> stage_deriv(double t, const std::vector<double>& s,
                                  const std::vector<double>& xd,
                                  const std::vector<double>& r_held) const {
    std::vector<double> x = s;
    if (derivative_free_) {
      const std::vector<double> r = pw_ ? r_held : ref_values(t);
      for (int i = 0; i < n_; ++i) x[i] += r[i];
    }
    const auto Lx = L_.multiply(x);
    const auto Lxd = M_ == 0 ? Lx : L_.multiply(xd);
    std::vector<double> d(n_);
    const std::vector<double> rd =
        derivative_free_ ? std::vector<double>(n_, 0.0) : ref_slope(t);
    for (int i = 0; i < n_; ++i)
      d[i] = -p_.alpha * ((1.0 - p_.k) * Lx[i] + p_.k * Lxd[i]) + rd[i];
    return d;
  }

  // True xdot and control at a recorded node (right limit at jumps).
  void record_node(int idx, double t, const std::vector<double>* x0) {
    const auto& x = traj_.states[idx];
    const auto Lx = L_.multiply(x);
    const auto Lxd = M_ == 0 ? Lx : L_.multiply(traj_.states[idx - M_]);
    std::vector<double> u(n_), d(n_);
    const auto rd = ref_slope(t);
    for (int i = 0; i < n_; ++i) {
      u[i] = -p_.alpha * ((1.0 - p_.k) * Lx[i] + p_.k * Lxd[i]);
      d[i] = u[i] + rd[i];
      if (!std::isfinite(x[i])) traj_.flagged_divergent = true;
    }
    traj_.controls[idx] = std::move(u);
    xdot_[idx] = std::move(d);
    traj_.ref_avg[idx] = ref_ ? mean(ref_right(t)) : mean(*x0);

    // one-sided slope from the left, for interpolation intervals that end
    // on this node (kinks and jumps sit exactly on nodes)
    if (idx > traj_.history_steps) {
      const auto Lp = L_.multiply(pre_[idx]);
      const auto Lpd = M_ == 0 ? Lp : L_.multiply(pre_[idx - M_]);
      for (int i = 0; i < n_; ++i)
        xdot_pre_[idx][i] =
            -p_.alpha * ((1.0 - p_.k) * Lp[i] + p_.k * Lpd[i]) + rd[i];
    }
  }

  void run(const std::vector<double>* x0) {
    const int total = M_ + steps_ + 1;
    traj_.times.resize(total);
    traj_.states.assign(total, std::vector<double>(n_, 0.0));
    traj_.controls.assign(total, std::vector<double>(n_, 0.0));
    traj_.ref_avg.assign(total, 0.0);
    xdot_.assign(total, std::vector<double>(n_, 0.0));
    xdot_pre_.assign(total, std::vector<double>(n_, 0.0));
    pre_.assign(total, std::vector<double>(n_, 0.0));
    for (int i = 0; i < total; ++i) traj_.times[i] = (i - M_) * h_;

    // pre_[M_] stays zero: the history meets x(0) with a jump
    traj_.states[M_] = x0 ? *x0 : ref_values(0.0);
    record_node(M_, 0.0, x0);

    std::vector<double> s = traj_.states[M_];
    if (derivative_free_) s.assign(n_, 0.0);  // y = x - r starts at zero

    for (int idx = M_; idx + 1 < total; ++idx) {
      const double t = traj_.times[idx];
      const std::vector<double> r_held = pw_ ? ref_right(t) : std::vector<double>();
      const auto dmid = M_ == 0 ? std::vector<double>()
                                : delayed(t + 0.5 * h_ - p_.tau, false);
      const auto& d1 = M_ == 0 ? s : traj_.states[idx - M_];
      const auto k1 = stage_deriv(t, s, d1, r_held);
      const auto k2 = stage_deriv(t + 0.5 * h_, axpy(s, 0.5 * h_, k1), dmid, r_held);
      const auto k3 = stage_deriv(t + 0.5 * h_, axpy(s, 0.5 * h_, k2), dmid, r_held);
      const auto d4 = M_ == 0 ? s : delayed(t + h_ - p_.tau, true);
      const auto k4 = stage_deriv(t + h_, axpy(s, h_, k3), d4, r_held);
      for (int i = 0; i < n_; ++i)
        s[i] += h_ / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

      const double t1 = traj_.times[idx + 1];
      std::vector<double>& x1 = traj_.states[idx + 1];
      if (derivative_free_) {
        const auto r = ref_right(t1);
        for (int i = 0; i < n_; ++i) x1[i] = s[i] + r[i];
        if (pw_) {
          const auto before = ref_values(t1 - 0.5 * h_);
          for (int i = 0; i < n_; ++i) pre_[idx + 1][i] = s[i] + before[i];
        } else {
          pre_[idx + 1] = x1;
        }
      } else {
        x1 = s;
        pre_[idx + 1] = s;
        if (pw_) {
          // sample-and-hold jumps enter the state directly (rdot is a
          // train of impulses at the sampling instants)
          const auto before = ref_values(t1 - 0.5 * h_);
          const auto after = ref_values(t1 + 0.5 * h_);
          for (int i = 0; i < n_; ++i) x1[i] += after[i] - before[i];
          s = x1;
        }
      }
      record_node(idx + 1, t1, x0);
    }
  }

  Matrix L_;
  ConsensusParams p_;
  const ReferenceSignal* ref_;
  bool derivative_free_;
  bool pw_ = false;
  int n_, M_ = 0, steps_ = 0;
  double h_ = 0.0;
  Trajectory traj_;
  std::vector<std::vector<double>> xdot_;
  std::vector<std::vector<double>> xdot_pre_;  // left-limit slope per node
  std::vector<std::vector<double>> pre_;       // left limit of x per node
};

}  // namespace

Trajectory simulate(const Graph& g, const ConsensusParams& p,
                    const ReferenceSignal& ref, double horizon, double dt_max) {
  return Integrator(g, p, &ref, nullptr, horizon, dt_max, false).take();
}

Trajectory simulate_derivative_free(const Graph& g, const ConsensusParams& p,
                                    const ReferenceSignal& ref, double horizon,
                                    double dt_max) {
  return Integrator(g, p, &ref, nullptr, horizon, dt_max, true).take();
}

Trajectory zero_input_simulate(const Graph& g, const ConsensusParams& p,
                               const std::vector<double>& x0, double horizon,
                               double dt_max) {
  return Integrator(g, p, nullptr, &x0, horizon, dt_max, false).take();
}

double control_effort(const Trajectory& traj) {
  double sup = 0.0;
  for (int idx = traj.history_steps; idx < traj.steps(); ++idx)
    for (double u : traj.controls[idx]) sup = std::max(sup, std::abs(u));
  return sup;
}

std::vector<double> tracking_error(const Trajectory& traj) {
  std::vector<double> err;
  err.reserve(traj.steps() - traj.history_steps);
  for (int idx = traj.history_steps; idx < traj.steps(); ++idx) {
    double e = 0.0;
    for (double x : traj.states[idx])
      e = std::max(e, std::abs(x - traj.ref_avg[idx]));
    err.push_back(e);
  }
  return err;
}

double estimate_decay_rate(const Trajectory& traj) {
  std::vector<double> d;
  for (int idx = traj.history_steps; idx < traj.steps(); ++idx) {
    const auto& x = traj.states[idx];
    const double m = mean(x);
    double s = 0.0;
    for (double xi : x) s += (xi - m) * (xi - m);
    d.push_back(std::sqrt(s));
  }
  if (d.empty() || d.front() <= 0.0)
    throw std::runtime_error("estimate_decay_rate: no initial disagreement");

  // stop fitting once the norm hits the numerical settling floor
  const double floor = 1e-12 * d.front();
  int window = static_cast<int>(d.size());
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    if (d[i] < floor) {
      window = i;
      break;
    }
  const int start = static_cast<int>(std::floor(0.4 * window));

  std::vector<int> pts;
  for (int i = std::max(start, 1); i + 1 < window; ++i)
    if (d[i] > d[i - 1] && d[i] >= d[i + 1]) pts.push_back(i);
  if (static_cast<int>(pts.size()) < 4) {
    pts.clear();
    for (int i = start; i < window; ++i)
      if (d[i] > 0.0) pts.push_back(i);
  }
  if (static_cast<int>(pts.size()) < 4)
    throw std::runtime_error(
        "estimate_decay_rate: insufficient data for a rate fit");

  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  for (int i : pts) {
    const double t = traj.times[traj.history_steps + i];
    const double y = std::log(d[i]);
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
  }
  const double np = static_cast<double>(pts.size());
  const double slope = (np * sty - st * sy) / (np * stt - st * st);
  return -slope;
}

double modal_closed_form(double lambda, const ConsensusParams& p, double z0,
                         double t) {
  p.validate();
  const double tau = p.tau;
  const double tol = 1e-12 * (1.0 + tau);
  if (t < -tau - tol || t > 2.0 * tau + tol)
    throw std::domain_error("modal_closed_form: t outside [-tau, 2*tau]");
  if (t < 0.0) return 0.0;
  const double c = p.alpha * (1.0 - p.k) * lambda;
  if (t <= tau) return z0 * std::exp(-c * t);
  // one delay interval further: variation of constants over [tau, t] with
  // the delayed argument still on the first branch
  return z0 * std::exp(-c * t) *
         (1.0 - p.alpha * p.k * lambda * std::exp(c * tau) * (t - tau));
}

std::vector<double> series_solution(const Spectrum& spec,
                                    const ConsensusParams& p,
                                    const std::vector<double>& z0, double t,
                                    int J) {
  p.validate();
  if (J < 1) throw std::invalid_argument("series_solution: J must be >= 1");
  if (static_cast<int>(z0.size()) != spec.size() - 1)
    throw std::invalid_argument(
        "series_solution: z0 must hold the N-1 disagreement coordinates");

  std::vector<double> out(z0.size());
  for (std::size_t m = 0; m < z0.size(); ++m) {
    const double lambda = spec.eigenvalue(static_cast<int>(m) + 1);
    if (p.k == 0.0 || p.tau == 0.0 || lambda == 0.0) {
      out[m] = z0[m] * std::exp(-p.alpha * lambda * t);
      continue;
    }
    const double c = p.alpha * (1.0 - p.k) * lambda;
    const double a = -p.alpha * p.k * lambda;
    const std::complex<double> arg = a * p.tau * std::exp(c * p.tau);
    std::complex<double> sum = 0.0;
    for (int j = -J; j <= J; ++j) {
      const std::complex<double> S = lambert_w(j, arg) / p.tau - c;
      const std::complex<double> denom =
          1.0 + a * p.tau * std::exp(-S * p.tau);
      if (std::abs(denom) < 1e-14) {
        std::cerr << "series_solution: skipping branch " << j
                  << " (vanishing residue denominator)\n";
        continue;
      }
      sum += std::exp(S * t) / denom;
    }
    out[m] = sum.real() * z0[m];
  }
  return out;
}

void write_csv(const Trajectory& traj, std::ostream& out) {
  const int n = traj.agents();
  out << "t";
  for (int i = 1; i <= n; ++i) out << ",x_" << i;
  for (int i = 1; i <= n; ++i) out << ",u_" << i;
  out << ",r_avg,err\n";
  const auto err = tracking_error(traj);
  char buf[32];
  auto emit = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.13e", v);
    out << buf;
  };
  for (int idx = traj.history_steps; idx < traj.steps(); ++idx) {
    emit(traj.times[idx]);
    for (double x : traj.states[idx]) {
      out << ',';
      emit(x);
    }
    for (double u : traj.controls[idx]) {
      out << ',';
      emit(u);
    }
    out << ',';
    emit(traj.ref_avg[idx]);
    out << ',';
    emit(err[idx - traj.history_steps]);
    out << '\n';
  }
}

void write_csv(const Trajectory& traj, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("write_csv: cannot open " + path);
  write_csv(traj, f);
}

}  // namespace dac

#pragma once

#include <cstdint>
#include <vector>

namespace dac {

/// Per-agent one-sided reference input r^i(t) (zero for t < 0).
class ReferenceSignal {
 public:
  virtual ~ReferenceSignal() = default;

  virtual int agents() const = 0;
  virtual double value(int agent, double t) const = 0;
  virtual double derivative(int agent, double t) const = 0;

  /// True for sample-and-hold signals whose derivative is zero between
  /// jumps; integrators then apply the jumps explicitly.
  virtual bool piecewise_constant() const { return false; }

  /// gamma: bound on the Euclidean norm of the centered derivative,
  /// sup_t ||(I - (1/N) 1 1^T) rdot(t)||.
  virtual double disagreement_derivative_bound() const = 0;

  double average(double t) const;
};

/// Constant per-agent reference.
class StaticReference : public ReferenceSignal {
 public:
  explicit StaticReference(std::vector<double> values);
  int agents() const override { return static_cast<int>(values_.size()); }
  double value(int agent, double t) const override;
  double derivative(int, double) const override { return 0.0; }
  double disagreement_derivative_bound() const override { return 0.0; }

 private:
  std::vector<double> values_;
};

/// Smooth sinusoids sharing one frequency:
///   r^i(t) = offset_i + amp_i * sin(omega t + phase_i),
/// with gamma computed exactly from the centered derivative amplitudes.
class SinusoidReference : public ReferenceSignal {
 public:
  SinusoidReference(std::vector<double> offsets, std::vector<double> amps,
                    double omega, std::vector<double> phases);
  int agents() const override { return static_cast<int>(offsets_.size()); }
  double value(int agent, double t) const override;
  double derivative(int agent, double t) const override;
  double disagreement_derivative_bound() const override { return gamma_; }

 private:
  std::vector<double> offsets_, amps_, phases_;
  double omega_;
  double gamma_;
};

/// Zero-order-hold samples of amp_i * (2 + sin(omega_m t_m + phi_m)) + bias_i
/// taken at the given rate; omega_m ~ N(0, 0.25) and phi_m ~ N(0, (pi/2)^2)
/// are redrawn per sample from a seeded generator (Box-Muller over a 64-bit
/// engine, so traces are reproducible across platforms).
///
/// The held value is left-continuous: sample m applies on (m/rate, (m+1)/rate].
class ZohSampledReference : public ReferenceSignal {
 public:
  ZohSampledReference(std::vector<double> amps, std::vector<double> biases,
                      double sample_rate, double horizon, std::uint64_t seed);

  int agents() const override { return static_cast<int>(amps_.size()); }
  double value(int agent, double t) const override;
  double derivative(int, double) const override { return 0.0; }
  bool piecewise_constant() const override { return true; }
  double disagreement_derivative_bound() const override { return 0.0; }

  double sample_rate() const { return rate_; }

 private:
  int epoch_index(double t) const;

  std::vector<double> amps_, biases_;
  double rate_;
  std::vector<double> base_samples_;  // 2 + sin(omega_m t_m + phi_m) per epoch
};

}  // namespace dac

#include "dac/reference_signal.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace dac {

double ReferenceSignal::average(double t) const {
  const int n = agents();
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += value(i, t);
  return s / n;
}

StaticReference::StaticReference(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty())
    throw std::invalid_argument("StaticReference: needs at least one agent");
}

double StaticReference::value(int agent, double t) const {
  return t < 0.0 ? 0.0 : values_[agent];
}

SinusoidReference::SinusoidReference(std::vector<double> offsets,
                                     std::vector<double> amps, double omega,
                                     std::vector<double> phases)
    : offsets_(std::move(offsets)),
      amps_(std::move(amps)),
      phases_(std::move(phases)),
      omega_(omega) {
  const std::size_t n = offsets_.size();
  if (n == 0 || amps_.size() != n || phases_.size() != n)
    throw std::invalid_argument("SinusoidReference: size mismatch");

  // rdot_i = omega (A_i cos wt - B_i sin wt) with A_i = amp_i cos(phase_i),
  // B_i = amp_i sin(phase_i). After centering, the squared norm is
  // (P+Q)/2 + ((P-Q)/2) cos 2wt - R sin 2wt, so its sup has a closed form.
  double abar = 0.0, bbar = 0.0;
  std::vector<double> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = amps_[i] * std::cos(phases_[i]);
    b[i] = amps_[i] * std::sin(phases_[i]);
    abar += a[i];
    bbar += b[i];
  }
  abar /= n;
  bbar /= n;
  double p = 0.0, q = 0.0, r = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double at = a[i] - abar, bt = b[i] - bbar;
    p += at * at;
    q += bt * bt;
    r += at * bt;
  }
  const double half_sum = 0.5 * (p + q), half_diff = 0.5 * (p - q);
  gamma_ = std::abs(omega_) *
           std::sqrt(half_sum + std::sqrt(half_diff * half_diff + r * r));
}

double SinusoidReference::value(int agent, double t) const {
  if (t < 0.0) return 0.0;
  return offsets_[agent] + amps_[agent] * std::sin(omega_ * t + phases_[agent]);
}

double SinusoidReference::derivative(int agent, double t) const {
  if (t < 0.0) return 0.0;
  return amps_[agent] * omega_ * std::cos(omega_ * t + phases_[agent]);
}

ZohSampledReference::ZohSampledReference(std::vector<double> amps,
                                         std::vector<double> biases,
                                         double sample_rate, double horizon,
                                         std::uint64_t seed)
    : amps_(std::move(amps)), biases_(std::move(biases)), rate_(sample_rate) {
  const std::size_t n = amps_.size();
  if (n == 0 || biases_.size() != n)
    throw std::invalid_argument("ZohSampledReference: size mismatch");
  if (!(sample_rate > 0.0) || !(horizon > 0.0))
    throw std::invalid_argument(
        "ZohSampledReference: rate and horizon must be positive");

  const int epochs = static_cast<int>(std::ceil(horizon * rate_)) + 1;
  std::mt19937_64 rng(seed);
  // Box-Muller over the raw engine so traces are platform-independent
  // (std::normal_distribution's algorithm is unspecified).
  auto uniform = [&rng]() {
    return (static_cast<double>(rng() >> 11) + 0.5) / 9007199254740992.0;
  };
  const double pi = std::acos(-1.0);
  base_samples_.reserve(epochs);
  for (int m = 0; m < epochs; ++m) {
    const double u1 = uniform(), u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    const double omega = 0.5 * (mag * std::cos(2.0 * pi * u2));
    const double phi = 0.5 * pi * (mag * std::sin(2.0 * pi * u2));
    const double tm = m / rate_;
    base_samples_.push_back(2.0 + std::sin(omega * tm + phi));
  }
}

int ZohSampledReference::epoch_index(double t) const {
  int m = static_cast<int>(std::ceil(t * rate_)) - 1;
  if (m < 0) m = 0;
  const int last = static_cast<int>(base_samples_.size()) - 1;
  if (m > last) m = last;
  return m;
}

double ZohSampledReference::value(int agent, double t) const {
  if (t < 0.0) return 0.0;
  return amps_[agent] * base_samples_[epoch_index(t)] + biases_[agent];
}

}  // namespace dac

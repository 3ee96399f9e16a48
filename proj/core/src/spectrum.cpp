#include "dac/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dac {
namespace {

double off_diagonal_frobenius(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double frobenius(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Cyclic Jacobi: sweeps of rotations over all (p, q) pairs until the
// off-diagonal mass drops below 1e-12 of the Frobenius norm.
void jacobi(Matrix& a, Matrix& v) {
  const int n = a.rows();
  const double stop = 1e-12 * std::max(frobenius(a), 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_frobenius(a) <= stop) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int i = 0; i < n; ++i) {
          const double aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (int j = 0; j < n; ++j) {
          const double apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - s * aqj;
          a(q, j) = s * apj + c * aqj;
        }
        for (int i = 0; i < n; ++i) {
          const double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }
}

}  // namespace

Spectrum::Spectrum(std::vector<double> eigenvalues, Matrix transform)
    : eigenvalues_(std::move(eigenvalues)), transform_(std::move(transform)) {}

bool Spectrum::connected(double tol) const {
  return size() >= 2 && eigenvalues_[1] > tol;
}

std::vector<double> Spectrum::to_modal(const std::vector<double>& q) const {
  if (static_cast<int>(q.size()) != size())
    throw std::invalid_argument("Spectrum: dimension mismatch");
  return transform_.multiply_transpose(q);
}

std::vector<double> Spectrum::from_modal(const std::vector<double>& z) const {
  if (static_cast<int>(z.size()) != size())
    throw std::invalid_argument("Spectrum: dimension mismatch");
  return transform_.multiply(z);
}

double Spectrum::disagreement_norm(const std::vector<double>& q) const {
  const auto z = to_modal(q);
  double s = 0.0;
  for (size_t i = 1; i < z.size(); ++i) s += z[i] * z[i];
  return std::sqrt(s);
}

Spectrum spectrum(const Matrix& laplacian) {
  const int n = laplacian.rows();
  if (n != laplacian.cols())
    throw std::invalid_argument("spectrum: matrix must be square");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(laplacian(i, j) - laplacian(j, i)) >
          1e-12 * (1.0 + std::abs(laplacian(i, j))))
        throw std::invalid_argument("spectrum: matrix must be symmetric");

  Matrix a = laplacian;
  Matrix v = Matrix::identity(n);
  jacobi(a, v);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a(x, x) < a(y, y); });

  std::vector<double> eig(n);
  Matrix t(n, n);
  for (int col = 0; col < n; ++col) {
    const int src = order[col];
    eig[col] = a(src, src);
    // Sign convention: largest-magnitude component positive.
    int imax = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(v(i, src)) > std::abs(v(imax, src))) imax = i;
    const double sign = v(imax, src) < 0.0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) t(i, col) = sign * v(i, src);
  }

  // For a connected graph the zero mode is the consensus direction; snap it
  // so T = [1/sqrt(N) 1, R] holds exactly.
  const double c = 1.0 / std::sqrt(static_cast<double>(n));
  double dev = 0.0;
  for (int i = 0; i < n; ++i) dev += (t(i, 0) - c) * (t(i, 0) - c);
  if (std::sqrt(dev) < 1e-6)
    for (int i = 0; i < n; ++i) t(i, 0) = c;

  return Spectrum(std::move(eig), std::move(t));
}

}  // namespace dac

#pragma once

#include <vector>

#include "dac/graph.hpp"
#include "dac/matrix.hpp"

namespace dac {

/// Eigen-decomposition of a graph Laplacian: ascending eigenvalues and the
/// orthonormal transform T whose first column is the consensus direction
/// 1/sqrt(N) * 1 (the remaining columns form R).
class Spectrum {
 public:
  Spectrum(std::vector<double> eigenvalues, Matrix transform);

  int size() const { return static_cast<int>(eigenvalues_.size()); }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  double eigenvalue(int i) const { return eigenvalues_[i]; }
  double lambda2() const { return eigenvalues_[1]; }
  double lambda_max() const { return eigenvalues_.back(); }
  const Matrix& transform() const { return transform_; }

  bool connected(double tol = 1e-9) const;

  /// T^T q: modal coordinates (entry 0 is the consensus component).
  std::vector<double> to_modal(const std::vector<double>& q) const;
  /// T z: back to node coordinates.
  std::vector<double> from_modal(const std::vector<double>& z) const;

  /// ||R^T q||, the norm of the disagreement component of q. Equals the
  /// norm of q centered around its mean.
  double disagreement_norm(const std::vector<double>& q) const;

 private:
  std::vector<double> eigenvalues_;
  Matrix transform_;
};

/// Jacobi eigen-decomposition of a symmetric PSD matrix. Throws on
/// non-symmetric input. Eigenvector signs follow a deterministic
/// convention (largest-magnitude component positive).
Spectrum spectrum(const Matrix& laplacian);

inline Spectrum spectrum(const Graph& g) { return spectrum(laplacian(g)); }

}  // namespace dac

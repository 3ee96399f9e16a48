#pragma once

#include <cassert>
#include <vector>

namespace dac {

/// Minimal dense row-major matrix, sized for graphs of at most a few
/// hundred nodes.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  double operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::vector<double> multiply(const std::vector<double>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    std::vector<double> out(rows_, 0.0);
    for (int i = 0; i < rows_; ++i) {
      double s = 0.0;
      for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }

  std::vector<double> multiply_transpose(const std::vector<double>& v) const {
    assert(static_cast<int>(v.size()) == rows_);
    std::vector<double> out(cols_, 0.0);
    for (int j = 0; j < cols_; ++j) {
      double s = 0.0;
      for (int i = 0; i < rows_; ++i) s += (*this)(i, j) * v[i];
      out[j] = s;
    }
    return out;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

}  // namespace dac

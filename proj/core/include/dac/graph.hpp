#pragma once

#include <string>

#include "dac/matrix.hpp"

namespace dac {

/// Undirected weighted graph held as a symmetric nonnegative adjacency
/// table with zero diagonal.
class Graph {
 public:
  explicit Graph(int n);

  /// Validates symmetry, nonnegative weights and a zero diagonal.
  static Graph from_adjacency(const Matrix& adjacency);

  void add_edge(int i, int j, double weight);

  int size() const { return n_; }
  double weight(int i, int j) const { return adj_(i, j); }
  const Matrix& adjacency() const { return adj_; }

  bool connected() const;

 private:
  int n_;
  Matrix adj_;
};

/// Reads a plain-text edge list: one "i j weight" triple per line,
/// 0-based node indices, '#' starts a comment.
Graph load_edge_list(const std::string& path);

/// L = Diag(A 1) - A. Row sums cancel by construction.
Matrix laplacian(const Graph& g);

}  // namespace dac

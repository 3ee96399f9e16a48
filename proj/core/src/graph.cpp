#include "dac/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dac {

Graph::Graph(int n) : n_(n), adj_(n, n, 0.0) {
  if (n <= 0) throw std::invalid_argument("Graph: node count must be positive");
}

Graph Graph::from_adjacency(const Matrix& adjacency) {
  if (adjacency.rows() != adjacency.cols())
    throw std::invalid_argument("Graph: adjacency must be square");
  Graph g(adjacency.rows());
  for (int i = 0; i < g.n_; ++i) {
    if (adjacency(i, i) != 0.0)
      throw std::invalid_argument("Graph: adjacency diagonal must be zero");
    for (int j = 0; j < g.n_; ++j) {
      if (adjacency(i, j) < 0.0)
        throw std::invalid_argument("Graph: negative edge weight");
      if (adjacency(i, j) != adjacency(j, i))
        throw std::invalid_argument("Graph: adjacency must be symmetric");
    }
  }
  g.adj_ = adjacency;
  return g;
}

void Graph::add_edge(int i, int j, double weight) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw std::invalid_argument("Graph: node index out of range");
  if (i == j) throw std::invalid_argument("Graph: self-loops not allowed");
  if (weight < 0.0) throw std::invalid_argument("Graph: negative edge weight");
  adj_(i, j) = weight;
  adj_(j, i) = weight;
}

bool Graph::connected() const {
  std::vector<char> seen(n_, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n_; ++u) {
      if (!seen[u] && adj_(v, u) > 0.0) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n_;
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);

  struct Edge {
    int i, j;
    double w;
  };
  std::vector<Edge> edges;
  int max_node = -1;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    int i, j;
    double w;
    if (!(ss >> i)) continue;  // blank or comment-only line
    if (!(ss >> j >> w))
      throw std::invalid_argument("malformed edge line in " + path + ": " + line);
    if (i < 0 || j < 0)
      throw std::invalid_argument("negative node index in " + path);
    edges.push_back({i, j, w});
    max_node = std::max(max_node, std::max(i, j));
  }
  if (max_node < 0) throw std::invalid_argument("graph file has no edges: " + path);

  Graph g(max_node + 1);
  for (const auto& e : edges) g.add_edge(e.i, e.j, e.w);
  return g;
}

Matrix laplacian(const Graph& g) {
  const int n = g.size();
  Matrix l(n, n, 0.0);
  for (int i = 0; i < n; ++i) {
    double degree = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      degree += g.weight(i, j);
      l(i, j) = -g.weight(i, j);
    }
    l(i, i) = degree;
  }
  return l;
}

}  // namespace dac

#pragma once

#include <random>
#include <vector>

#include "dac/graph.hpp"

namespace testutil {

// Five-node network used throughout: Laplacian eigenvalues {0, 3, 3, 5, 5}.
inline dac::Graph demo_graph() {
  dac::Graph g(5);
  const int edges[][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                          {1, 2}, {1, 4}, {2, 3}, {3, 4}};
  for (auto [i, j] : edges) g.add_edge(i, j, 1.0);
  return g;
}

// Deterministic connected Erdos-Renyi graph (unit weights).
inline dac::Graph random_connected_graph(int n, std::mt19937_64& rng,
                                         double p = 0.5) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (;;) {
    dac::Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) < p) g.add_edge(i, j, 1.0);
    if (g.connected()) return g;
  }
}

inline std::vector<double> spread_vector(int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = std::cos(1.0 + 2.7 * i) + 0.1 * i;
  return v;
}

}  // namespace testutil

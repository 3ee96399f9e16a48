#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>
#include <tuple>

#include "dac/graph.hpp"
#include "dac/spectrum.hpp"
#include "doctest.h"
#include "helpers.hpp"

using testutil::demo_graph;

TEST_CASE("demo graph Laplacian degrees and spectrum") {
  const auto g = demo_graph();
  const auto L = dac::laplacian(g);
  const double want_diag[] = {4, 3, 3, 3, 3};
  for (int i = 0; i < 5; ++i) {
    CHECK(L(i, i) == want_diag[i]);
    double row = 0.0;
    for (int j = 0; j < 5; ++j) row += L(i, j);
    CHECK(row == doctest::Approx(0.0).epsilon(1e-12));
  }
  const auto s = dac::spectrum(g);
  const double want_eig[] = {0, 3, 3, 5, 5};
  for (int i = 0; i < 5; ++i)
    CHECK(s.eigenvalue(i) == doctest::Approx(want_eig[i]).epsilon(1e-9));
  CHECK(s.connected());
  CHECK(s.lambda2() == doctest::Approx(3.0));
  CHECK(s.lambda_max() == doctest::Approx(5.0));
}

TEST_CASE("transform is orthonormal and diagonalizes the Laplacian") {
  std::mt19937_64 rng(11);
  for (int n : {5, 9, 14}) {
    const auto g = testutil::random_connected_graph(n, rng);
    const auto L = dac::laplacian(g);
    const auto s = dac::spectrum(L);
    const auto& T = s.transform();
    for (int i = 0; i < n; ++i) {
      CHECK(T(i, 0) == doctest::Approx(1.0 / std::sqrt(n)).epsilon(1e-9));
      for (int j = 0; j < n; ++j) {
        double dot = 0.0, rec = 0.0;
        for (int r = 0; r < n; ++r) {
          dot += T(r, i) * T(r, j);
          rec += T(i, r) * s.eigenvalue(r) * T(j, r);
        }
        CHECK(dot == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));
        CHECK(rec == doctest::Approx(L(i, j)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("complement-graph eigenvalue identity") {
  // independent oracle: for unit-weight G on n nodes,
  // nonzero eigenvalues of the complement are n - lambda_{n+2-i}(G)
  std::mt19937_64 rng(23);
  for (int n : {6, 8, 11}) {
    const auto g = testutil::random_connected_graph(n, rng);
    dac::Graph gc(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (g.weight(i, j) == 0.0) gc.add_edge(i, j, 1.0);
    const auto eg = dac::spectrum(g).eigenvalues();
    const auto ec = dac::spectrum(dac::laplacian(gc)).eigenvalues();
    for (int i = 1; i < n; ++i)
      CHECK(ec[i] == doctest::Approx(n - eg[n - i]).epsilon(1e-8));
  }
}

TEST_CASE("modal transforms round-trip and measure disagreement") {
  const auto s = dac::spectrum(demo_graph());
  const std::vector<double> q = {1.3, -0.2, 0.7, 2.1, -1.4};
  const auto z = s.to_modal(q);
  const auto back = s.from_modal(z);
  for (int i = 0; i < 5; ++i) CHECK(back[i] == doctest::Approx(q[i]).epsilon(1e-12));

  double m = 0.0;
  for (double v : q) m += v;
  m /= 5;
  double centered = 0.0;
  for (double v : q) centered += (v - m) * (v - m);
  CHECK(s.disagreement_norm(q) ==
        doctest::Approx(std::sqrt(centered)).epsilon(1e-12));
  CHECK(z[0] == doctest::Approx(std::sqrt(5.0) * m).epsilon(1e-12));
}

TEST_CASE("disconnected graphs are detected") {
  dac::Graph g(4);
  g.add_edge(0, 1, 1.0);
  g.add_edge(2, 3, 1.0);
  CHECK_FALSE(g.connected());
  const auto s = dac::spectrum(g);
  CHECK_FALSE(s.connected());
  CHECK(s.lambda2() == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("adjacency validation") {
  dac::Matrix a(2, 2);
  a(0, 1) = 1.0;  // asymmetric
  CHECK_THROWS_AS((void)dac::Graph::from_adjacency(a), std::invalid_argument);
  dac::Matrix b(2, 2);
  b(0, 0) = 1.0;  // nonzero diagonal
  CHECK_THROWS_AS((void)dac::Graph::from_adjacency(b), std::invalid_argument);
  dac::Matrix c(2, 2);
  c(0, 1) = c(1, 0) = -1.0;  // negative weight
  CHECK_THROWS_AS((void)dac::Graph::from_adjacency(c), std::invalid_argument);
}

TEST_CASE("edge-list files parse with comments and reject junk") {
  const std::string good = "/tmp/dac_good_edges.txt";
  {
    std::ofstream f(good);
    f << "# three nodes\n0 1 1.0\n\n1 2 2.5 # tail comment\n";
  }
  const auto g = dac::load_edge_list(good);
  CHECK(g.size() == 3);
  CHECK(g.weight(1, 2) == 2.5);
  CHECK(g.weight(0, 2) == 0.0);

  const std::string bad = "/tmp/dac_bad_edges.txt";
  {
    std::ofstream f(bad);
    f << "0 1\n";
  }
  CHECK_THROWS(std::ignore = dac::load_edge_list(bad));
  CHECK_THROWS(std::ignore = dac::load_edge_list("/tmp/definitely_missing_file"));
  std::remove(good.c_str());
  std::remove(bad.c_str());
}

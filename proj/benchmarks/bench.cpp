#include <benchmark/benchmark.h>

#include <random>

#include "dac/graph.hpp"
#include "dac/lambert_w.hpp"
#include "dac/network_rate.hpp"
#include "dac/simulator.hpp"
#include "dac/spectrum.hpp"

namespace {

dac::Graph ring_with_chords(int n) {
  dac::Graph g(n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n, 1.0);
    g.add_edge(i, (i + 7) % n, 0.5);
  }
  return g;
}

void bm_lambert_w(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (auto _ : state) {
    const std::complex<double> z(dist(rng), dist(rng));
    benchmark::DoNotOptimize(dac::lambert_w(state.range(0), z));
  }
}
BENCHMARK(bm_lambert_w)->Arg(0)->Arg(-1)->Arg(3);

void bm_spectrum(benchmark::State& state) {
  const auto g = ring_with_chords(static_cast<int>(state.range(0)));
  const auto L = dac::laplacian(g);
  for (auto _ : state) benchmark::DoNotOptimize(dac::spectrum(L));
}
BENCHMARK(bm_spectrum)->Arg(10)->Arg(50);

void bm_optimal_delay(benchmark::State& state) {
  const auto spec = dac::spectrum(ring_with_chords(20));
  for (auto _ : state)
    benchmark::DoNotOptimize(dac::optimal_network_delay(spec, 1.0, 1.0));
}
BENCHMARK(bm_optimal_delay);

void bm_simulate(benchmark::State& state) {
  const auto g = ring_with_chords(20);
  std::vector<double> x0(20);
  for (int i = 0; i < 20; ++i) x0[i] = (i % 2) ? 1.0 : -1.0;
  const dac::ConsensusParams p{1.0, 1.0, 0.05};
  for (auto _ : state)
    benchmark::DoNotOptimize(dac::zero_input_simulate(g, p, x0, 1.0, 1e-3));
}
BENCHMARK(bm_simulate);

}  // namespace

BENCHMARK_MAIN();

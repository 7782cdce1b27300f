// Serial reference against the OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "modgraph/convergence.hpp"
#include "modgraph/kirchhoff.hpp"
#include "modgraph/probe.hpp"
#include "modgraph/subset_kernels.hpp"

using namespace modgraph;

namespace {

Multigraph doubled(int n) { return make_doubled_2ngon(n); }

template <bool Parallel>
void BM_CorankTable(benchmark::State& state) {
  const Multigraph g = doubled(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto t = Parallel ? kernels::corank_table(g.vertex_count(), g.edges())
                      : kernels::serial::corank_table(g.vertex_count(), g.edges());
    benchmark::DoNotOptimize(t.data());
  }
  state.counters["edges"] = g.edge_count();
}

template <bool Parallel>
void BM_DensityScan(benchmark::State& state) {
  const Multigraph g = doubled(static_cast<int>(state.range(0)));
  const auto corank = kernels::serial::corank_table(g.vertex_count(), g.edges());
  for (auto _ : state) {
    auto d = Parallel ? kernels::density_scan(corank, g.edge_count())
                      : kernels::serial::density_scan(corank, g.edge_count());
    benchmark::DoNotOptimize(d);
  }
}

template <bool Parallel>
void BM_SlackScan(benchmark::State& state) {
  const Multigraph g = doubled(static_cast<int>(state.range(0)));
  const auto corank = kernels::serial::corank_table(g.vertex_count(), g.edges());
  const std::vector<std::int64_t> weights(static_cast<std::size_t>(g.edge_count()), 2);
  for (auto _ : state) {
    auto s = Parallel ? kernels::slack_scan(corank, weights, 3, 0)
                      : kernels::serial::slack_scan(corank, weights, 3, 0);
    benchmark::DoNotOptimize(s);
  }
}

template <bool Parallel>
void BM_EstimateShells(benchmark::State& state) {
  const Multigraph theta = Multigraph::with_vertices(2, {{0, 1}, {0, 1}, {0, 1}});
  const CompiledPolynomial psi(psi_trees(theta));
  std::vector<double> log_grid;
  for (double r : ProbeConfig::default_r_grid()) log_grid.push_back(std::log(r));
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto v = Parallel ? estimate_shells(psi, 2.0, log_grid, samples, 1)
                      : serial::estimate_shells(psi, 2.0, log_grid, samples, 1);
    benchmark::DoNotOptimize(v.data());
  }
}

}  // namespace

BENCHMARK(BM_CorankTable<false>)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorankTable<true>)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DensityScan<false>)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DensityScan<true>)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SlackScan<false>)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SlackScan<true>)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EstimateShells<false>)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EstimateShells<true>)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

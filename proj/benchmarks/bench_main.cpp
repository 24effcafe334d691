// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "eumax/esum.hpp"
#include "eumax/oracle.hpp"
#include "eumax/problems/shortest_path.hpp"
#include "eumax/random_instances.hpp"

namespace {

void BM_moment_poisson(benchmark::State& state) {
  const auto dist = eumax::Distribution::poisson(1.5);
  const std::complex<double> s(-0.3, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(eumax::moment_from_exponent(dist, s).value);
}
BENCHMARK(BM_moment_poisson);

void BM_esum_decompose_ramp(benchmark::State& state) {
  const auto mu = eumax::UtilitySpec::threshold_ramp(0.5, 1.0);
  const double eps = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eumax::esum_decompose(mu, eps, 4001).size());
}
BENCHMARK(BM_esum_decompose_ramp)->Arg(5)->Arg(10)->Arg(20);

void BM_convolve_chain(benchmark::State& state) {
  std::vector<eumax::DiscreteLaw> laws;
  for (int i = 0; i < state.range(0); ++i)
    laws.push_back(eumax::make_law(
        eumax::Distribution::discrete({0.0, 0.25, 0.5}, {0.3, 0.4, 0.3})));
  for (auto _ : state) benchmark::DoNotOptimize(eumax::convolve(laws).support.size());
}
BENCHMARK(BM_convolve_chain)->Arg(6)->Arg(10);

void BM_solve_band_knapsack(benchmark::State& state) {
  const auto band = eumax::random_band_knapsack(static_cast<int>(state.range(0)), 7);
  const auto adapter = eumax::profit_band_adapter(band);
  const auto expsum =
      eumax::esum_decompose(eumax::UtilitySpec::threshold_ramp(1.0, 1.0), 0.15, 401);
  eumax::SolveOptions opts;
  opts.eps = 0.15;
  for (auto _ : state) benchmark::DoNotOptimize(eumax::solve(*adapter, expsum, opts).score);
}
BENCHMARK(BM_solve_band_knapsack)->Arg(6)->Arg(8);

void BM_solve_two_edge_path(benchmark::State& state) {
  eumax::ShortestPathInstance inst;
  inst.num_nodes = 2;
  inst.source = 0;
  inst.sink = 1;
  inst.hop_cap = 1;
  inst.edges.push_back({0, 1, eumax::Distribution::point_mass(1.0), "e1"});
  inst.edges.push_back(
      {0, 1, eumax::Distribution::discrete({0.9, 1.9}, {0.9, 0.1}), "e2"});
  const auto adapter = eumax::shortest_path_adapter(inst);
  const auto expsum =
      eumax::esum_decompose(eumax::UtilitySpec::threshold_ramp(0.5, 1.0), 0.05, 2001);
  eumax::SolveOptions opts;
  opts.eps = 0.05;
  for (auto _ : state) benchmark::DoNotOptimize(eumax::solve(*adapter, expsum, opts).score);
}
BENCHMARK(BM_solve_two_edge_path);

}  // namespace

BENCHMARK_MAIN();

// Serial reference against the OpenMP kernels.

#include <vector>

#include <benchmark/benchmark.h>

#include "yukawa/analysis.hpp"
#include "yukawa/oracle.hpp"
#include "yukawa/tridiagonal.hpp"

using namespace yukawa;

namespace {

Execution mode(const benchmark::State& state) { return state.range(1) ? Execution::Parallel : Execution::Serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(1) ? "openmp" : "serial"); }

RadialGrid grid_for(std::size_t points) {
  const PhysicalParams p;
  return RadialGrid::cells(0.0, 40.0 / p.delta(), points);
}

void BM_Assembly(benchmark::State& state) {
  const auto grid = grid_for(static_cast<std::size_t>(state.range(0)));
  const HamiltonianOptions options{.exec = mode(state)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_hamiltonian(grid, PhysicalParams{}, {}, 0, PotentialMode::GreeneAldrich, options));
  }
  label(state);
}

void BM_Bisection(benchmark::State& state) {
  const auto grid = grid_for(static_cast<std::size_t>(state.range(0)));
  const auto h = build_hamiltonian(grid, PhysicalParams{}, {}, 0, PotentialMode::GreeneAldrich);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tridiag::lowest_eigenvalues(h.diagonal, h.off_diagonal, 8, {.tolerance = 1e-14}, mode(state)));
  }
  label(state);
}

void BM_Sweep(benchmark::State& state) {
  std::vector<double> values;
  for (int i = 0; i < state.range(0); ++i) values.push_back(0.001 + 0.0001 * i);
  std::vector<QuantumNumbers> states;
  for (int m = -3; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) states.emplace_back(n, m);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(PhysicalParams{}, FieldConfig(5, 5), SweepAxis::Delta, values, states, mode(state)));
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_Assembly)->ArgsProduct({{8000, 64000}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Bisection)->ArgsProduct({{8000, 64000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->ArgsProduct({{50, 400}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

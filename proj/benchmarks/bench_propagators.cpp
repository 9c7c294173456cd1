#include <benchmark/benchmark.h>

#include "decolab/decolab.hpp"

namespace {

decolab::TwoLevelModel bench_model() {
  using decolab::Complex;
  const auto amps = decolab::make_amplitudes(Complex(0.6, 0.0), Complex(0.0, 0.8));
  return {amps, decolab::EnergyPair(0.0, 1.3), decolab::LindbladRates(0.7, 1.9)};
}

void BM_ApproxPropagator(benchmark::State& state) {
  const auto model = bench_model();
  double t = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decolab::approx_propagator(t, model));
  }
}
BENCHMARK(BM_ApproxPropagator);

void BM_OraclePropagator(benchmark::State& state) {
  const auto w = decolab::build_w(bench_model());
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(decolab::exact_propagator_oracle(t, w));
  }
}
BENCHMARK(BM_OraclePropagator)->Arg(1)->Arg(10)->Arg(100);

void BM_SpectralDecomposition(benchmark::State& state) {
  const auto model = bench_model();
  for (auto _ : state) {
    benchmark::DoNotOptimize(decolab::w_spectrum(model));
  }
}
BENCHMARK(BM_SpectralDecomposition);

void BM_SpectralPropagator(benchmark::State& state) {
  const auto spectrum = decolab::w_spectrum(bench_model());
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(decolab::exact_propagator_spectral(t, spectrum));
  }
}
BENCHMARK(BM_SpectralPropagator)->Arg(1)->Arg(10)->Arg(100);

void BM_CubicSolve(benchmark::State& state) {
  const auto cubic = decolab::characteristic_cubic(bench_model());
  for (auto _ : state) {
    benchmark::DoNotOptimize(decolab::solve_cubic(cubic));
  }
}
BENCHMARK(BM_CubicSolve);

void BM_Trajectory(benchmark::State& state) {
  const auto model = bench_model();
  const auto propagate =
      decolab::make_propagator(decolab::PropagatorMethod::kExactSpectral, model);
  const auto grid = decolab::time_grid(20.0, static_cast<int>(state.range(0)));
  const auto rho0 = decolab::DensityMatrix2::ket0();
  for (auto _ : state) {
    for (const double t : grid) {
      benchmark::DoNotOptimize(decolab::apply_propagator(
          propagate(t), rho0, decolab::PropagatorMethod::kExactSpectral));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(BM_Trajectory)->Arg(100)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();

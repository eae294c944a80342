#include <random>

#include <benchmark/benchmark.h>

#include "latwig/kernels.hpp"

using namespace latwig;

namespace {

void BM_AssembleSerial(benchmark::State& state) {
  const auto a = coefficients_to_position(coefficients_odd(LatticeDim(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::assemble(a));
}

void BM_AssembleOmp(benchmark::State& state) {
  const auto a = coefficients_to_position(coefficients_odd(LatticeDim(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::assemble(a));
}

void BM_OrthogonalitySerial(benchmark::State& state) {
  const auto f = assemble(coefficients_odd(LatticeDim(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::orthogonality_site(f, kDefaultTolerance));
}

void BM_OrthogonalityOmp(benchmark::State& state) {
  const auto f = assemble(coefficients_odd(LatticeDim(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::orthogonality_site(f, kDefaultTolerance));
}

void BM_CovarianceSerial(benchmark::State& state) {
  const LatticeDim n(static_cast<int>(state.range(0)));
  const auto c = coefficients_odd(n);
  const auto elems = sl2_enumerate_with_lifts(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::covariance_audit(c, elems, kDefaultTolerance));
}

void BM_CovarianceOmp(benchmark::State& state) {
  const LatticeDim n(static_cast<int>(state.range(0)));
  const auto c = coefficients_odd(n);
  const auto elems = sl2_enumerate_with_lifts(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::covariance_audit(c, elems, kDefaultTolerance));
}

void BM_WignerSerial(benchmark::State& state) {
  const LatticeDim n(static_cast<int>(state.range(0)));
  const auto f = assemble(coefficients_odd(n));
  std::mt19937_64 rng(1);
  const DensityMatrix rho = random_density(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::wigner_values(f, rho.matrix()));
}

void BM_WignerOmp(benchmark::State& state) {
  const LatticeDim n(static_cast<int>(state.range(0)));
  const auto f = assemble(coefficients_odd(n));
  std::mt19937_64 rng(1);
  const DensityMatrix rho = random_density(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::wigner_values(f, rho.matrix()));
}

}  // namespace

BENCHMARK(BM_AssembleSerial)->Arg(5)->Arg(9)->Arg(15);
BENCHMARK(BM_AssembleOmp)->Arg(5)->Arg(9)->Arg(15);
BENCHMARK(BM_OrthogonalitySerial)->Arg(5)->Arg(9)->Arg(15);
BENCHMARK(BM_OrthogonalityOmp)->Arg(5)->Arg(9)->Arg(15);
BENCHMARK(BM_CovarianceSerial)->Arg(5)->Arg(7)->Arg(9);
BENCHMARK(BM_CovarianceOmp)->Arg(5)->Arg(7)->Arg(9);
BENCHMARK(BM_WignerSerial)->Arg(9)->Arg(25);
BENCHMARK(BM_WignerOmp)->Arg(9)->Arg(25);

BENCHMARK_MAIN();

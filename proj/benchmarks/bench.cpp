// Microbenchmarks for the hot paths: series arithmetic, expansion assembly,
// and the quadrature oracle.

#include <benchmark/benchmark.h>

#include "oscint/amplitude.hpp"
#include "oscint/expansion.hpp"
#include "oscint/oracle.hpp"
#include "oscint/phase.hpp"
#include "oscint/series.hpp"

namespace {

oscint::TruncatedSeries dense_series(int order, double scale) {
  std::vector<double> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    c[static_cast<std::size_t>(n)] =
        scale / (1.0 + static_cast<double>(n * n));
  }
  return oscint::TruncatedSeries(std::move(c));
}

void bm_series_multiply(benchmark::State& state) {
  const auto a = dense_series(static_cast<int>(state.range(0)), 1.0);
  const auto b = dense_series(static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oscint::multiply(a, b));
  }
}
BENCHMARK(bm_series_multiply)->Arg(8)->Arg(16)->Arg(32);

void bm_series_revert(benchmark::State& state) {
  auto f = dense_series(static_cast<int>(state.range(0)), 0.3);
  {
    auto c = f.coeffs();
    c[0] = 0.0;
    c[1] = 1.0;
    f = oscint::TruncatedSeries(std::move(c));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(oscint::revert(f));
  }
}
BENCHMARK(bm_series_revert)->Arg(8)->Arg(16)->Arg(32);

void bm_expansion_full_line(benchmark::State& state) {
  const auto phase = oscint::build_phase(2.0, {0.5});
  const oscint::Amplitude amplitude({1.0, 0.5}, 0.2, 0.45);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oscint::full_line(phase, amplitude, +1, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(bm_expansion_full_line)->Arg(4)->Arg(8)->Arg(12);

void bm_oracle_fresnel(benchmark::State& state) {
  const auto phase = oscint::build_phase(2.0, {});
  const oscint::Amplitude amplitude({1.0}, 0.3, 0.6);
  const double lambda = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oscint::integrate_oscillatory(
        phase, amplitude, lambda, +1, oscint::Region::full_line));
  }
}
BENCHMARK(bm_oracle_fresnel)->Arg(100)->Arg(400)->Arg(1600);

}  // namespace

BENCHMARK_MAIN();

// Serial and OpenMP variants of the heavy kernels side by side.

#include <benchmark/benchmark.h>

#include "periodkit/abelian.hpp"
#include "periodkit/period.hpp"
#include "periodkit/poly_parse.hpp"

using namespace periodkit;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_expand_period(benchmark::State& st) {
  auto spec = normalize(parse_bipoly("1/2 x^2 + 1/2 y^2 + 1/3 x^3", {'x', 'y'}), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(expand_period(spec, exec_of(st), PeriodRoute::Cleared));
}

void BM_expand_period_reference(benchmark::State& st) {
  auto spec = normalize(parse_bipoly("1/2 x^2 + 1/2 y^2 + 1/3 x^3 - x y^2", {'x', 'y'}), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(expand_period(spec, exec_of(st), PeriodRoute::Reference));
}

void BM_series_I0_I1(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(series_I0_I1(static_cast<int>(st.range(1)), exec_of(st)));
}

void BM_wronskians_at_zero(benchmark::State& st) {
  const int n = static_cast<int>(st.range(1));
  auto basis = basis_G(n, n, exec_of(st));
  for (auto _ : st) benchmark::DoNotOptimize(wronskians_at_zero(basis, n, exec_of(st)));
}

}  // namespace

BENCHMARK(BM_expand_period)->ArgsProduct({{0, 1}, {12, 24}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_expand_period_reference)->ArgsProduct({{0, 1}, {12, 20}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_series_I0_I1)->ArgsProduct({{0, 1}, {20, 50}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_wronskians_at_zero)->ArgsProduct({{0, 1}, {20, 35}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

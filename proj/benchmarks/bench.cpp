#include <benchmark/benchmark.h>

#include "bcjack/jack.hpp"
#include "bcjack/lr.hpp"

namespace {

using bcjack::MultiplicityVector;
using bcjack::Rational;

MultiplicityVector geometric() {
  return {1, 1, Rational(1) / Rational(2)};
}

void BM_orbit_sum(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(bcjack::orbit_sum({3, 2, 1}));
}
BENCHMARK(BM_orbit_sum);

void BM_apply_sutherland(benchmark::State& state) {
  const auto f = bcjack::orbit_sum({2, 1});
  const auto r = geometric();
  for (auto _ : state)
    benchmark::DoNotOptimize(bcjack::apply_sutherland(f, r));
}
BENCHMARK(BM_apply_sutherland);

void BM_apply_sutherland_series(benchmark::State& state) {
  const auto f = bcjack::orbit_sum({2, 1});
  const auto r = geometric();
  for (auto _ : state)
    benchmark::DoNotOptimize(bcjack::apply_sutherland_series(f, r, {2, 1}));
}
BENCHMARK(BM_apply_sutherland_series);

void BM_exact_div(benchmark::State& state) {
  const auto a = bcjack::orbit_sum({2, 1});
  const auto b = bcjack::orbit_sum({1, 1});
  const auto product = a * b;
  for (auto _ : state)
    benchmark::DoNotOptimize(bcjack::exact_div(product, b));
}
BENCHMARK(BM_exact_div);

void BM_jack_polynomial(benchmark::State& state) {
  const auto r = geometric();
  for (auto _ : state)
    benchmark::DoNotOptimize(bcjack::jack_polynomial({2, 1}, r));
}
BENCHMARK(BM_jack_polynomial);

void BM_lr_coefficient(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        bcjack::lr_coefficient({4, 3, 2, 1}, {2, 1}, {3, 2, 1, 1}));
}
BENCHMARK(BM_lr_coefficient);

void BM_quadrature(benchmark::State& state) {
  const auto r = geometric();
  const auto f = bcjack::jack_polynomial({1, 0}, r).to_laurent();
  const auto g = bcjack::jack_polynomial({1, 1}, r).to_laurent();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        bcjack::inner_product_quadrature(f, g, r, 100, 1));
}
BENCHMARK(BM_quadrature);

}  // namespace

BENCHMARK_MAIN();

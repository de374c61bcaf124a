// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the evaluation hot paths: the scalar gamma kernels,
// one extended-beta quadrature, series evaluation with cold vs warm
// coefficient tables, and the integral-representation route.
#include <benchmark/benchmark.h>

#include "pqml/extbeta.hpp"
#include "pqml/gamma.hpp"
#include "pqml/mlcore.hpp"
#include "pqml/wright.hpp"

namespace {

void BM_gamma(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqml::gamma(x));
    x += 0.1;
    if (x > 150.0) x = 0.1;
  }
}
BENCHMARK(BM_gamma);

void BM_rgamma_negative(benchmark::State& state) {
  double x = -0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pqml::rgamma(x));
    x -= 0.1;
    if (x < -80.0) x = -0.05;
  }
}
BENCHMARK(BM_rgamma_negative);

void BM_beta_pq_quadrature(benchmark::State& state) {
  for (auto _ : state) {
    auto r = pqml::beta_pq(1.2, 1.3, 0.5, 0.8);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_beta_pq_quadrature);

void BM_ml_extended_pq_cold(benchmark::State& state) {
  const pqml::MLParams P{0.8, 1.1, 1.2, 2.5, 0.3, 0.6};
  for (auto _ : state) {
    auto r = pqml::ml_extended_pq(P, 0.9);  // rebuilds the coefficient table
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_ml_extended_pq_cold);

void BM_ml_extended_pq_warm(benchmark::State& state) {
  const pqml::MLParams P{0.8, 1.1, 1.2, 2.5, 0.3, 0.6};
  pqml::ExtendedMl ml(P);
  ml.value(2.0);  // warm the table once
  double z = -2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ml.value(z).value);
    z += 0.125;
    if (z > 2.0) z = -2.0;
  }
}
BENCHMARK(BM_ml_extended_pq_warm);

void BM_ml_integral_unit(benchmark::State& state) {
  const pqml::MLParams P{1.0, 1.0, 1.2, 2.5, 0.25, 0.5};
  for (auto _ : state) {
    auto r = pqml::ml_integral_unit(P, 1.0);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_ml_integral_unit);

void BM_wright_2psi2(benchmark::State& state) {
  pqml::WrightSpec spec;
  spec.upper = {{2.5, 1.0}, {2.7, 1.0}};
  spec.lower = {{1.0, 0.8}, {4.5, 1.0}};
  for (auto _ : state) {
    auto r = pqml::wright_psi(spec, 0.4);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_wright_2psi2);

}  // namespace

BENCHMARK_MAIN();

// Copyright 2026 The sylvtypes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "sylvtypes/exact_combinatorics.hpp"
#include "sylvtypes/model_formulas.hpp"
#include "sylvtypes/model_spec.hpp"
#include "sylvtypes/monte_carlo.hpp"

using namespace sylvtypes;

static void BM_GaussianTypes(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(formulas::gaussian_type_probs(d));
}
BENCHMARK(BM_GaussianTypes)->DenseRange(2, 12, 2)->Unit(benchmark::kMicrosecond);

static void BM_BetaTypes(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(formulas::beta_type_probs(d, 0.0));
}
BENCHMARK(BM_BetaTypes)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

static void BM_BetaPrimeTypes(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(formulas::beta_prime_type_probs(d, d / 2.0 + 0.5));
}
BENCHMARK(BM_BetaPrimeTypes)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

static void BM_RadonType(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  mc::RngStream rng(1, 0);
  const auto cloud = mc::sample(ModelSpec::gaussian(d), rng);
  for (auto _ : state) benchmark::DoNotOptimize(mc::radon_type(cloud));
}
BENCHMARK(BM_RadonType)->DenseRange(2, 10, 2);

static void BM_FacetOracle(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  mc::RngStream rng(1, 0);
  const auto cloud = mc::sample(ModelSpec::gaussian(d), rng);
  for (auto _ : state) benchmark::DoNotOptimize(mc::facet_count_oracle(cloud));
}
BENCHMARK(BM_FacetOracle)->DenseRange(2, 10, 2);

static void BM_SampleAndClassify(benchmark::State& state) {
  mc::RngStream rng(2, 0);
  const auto spec = ModelSpec::beta_model(4, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(mc::cloud_type(mc::sample(spec, rng)));
}
BENCHMARK(BM_SampleAndClassify);

// Euler-Frobenius rows are not memoized, so this measures the full
// r-Stirling expansion.
static void BM_EulerFrobeniusRow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto rho = make_rational(1, 2);
  for (auto _ : state) {
    for (int k = 0; k <= n; ++k) benchmark::DoNotOptimize(combinatorics::euler_frobenius(n, k, rho));
  }
}
BENCHMARK(BM_EulerFrobeniusRow)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

static void BM_ExactPipeline(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(types::solve_affine(formulas::conv_rw_deficits(d)));
}
BENCHMARK(BM_ExactPipeline)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

// Copyright 2026 The qlent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qlent/channels.hpp"
#include "qlent/entropy.hpp"
#include "qlent/theorems.hpp"

using namespace qlent;

namespace {

ComplexMatrix bench_hermitian(int dim, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  return 0.5 * (g + g.adjoint());
}

void BM_TensorProduct(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto a = bench_hermitian(d, 1);
  const auto b = bench_hermitian(d, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tensor_product(a, b));
  }
  state.SetComplexityN(d);
}
BENCHMARK(BM_TensorProduct)->RangeMultiplier(2)->Range(2, 32)->Complexity();

void BM_PartialTrace(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto joint = bench_hermitian(d * d, 3);
  const BipartiteSplit split{d, d};
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_out_b(joint, split));
  }
  state.SetComplexityN(d);
}
BENCHMARK(BM_PartialTrace)->RangeMultiplier(2)->Range(2, 16)->Complexity();

void BM_HermitianEigen(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto m = bench_hermitian(d, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigen(m));
  }
  state.SetComplexityN(d);
}
BENCHMARK(BM_HermitianEigen)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_RandomDensity(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_density(d, d, seed++));
  }
}
BENCHMARK(BM_RandomDensity)->RangeMultiplier(2)->Range(2, 32);

void BM_LogicalEntropy(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const DensityMatrix rho = random_density(d, d, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(logical_entropy(rho));
  }
}
BENCHMARK(BM_LogicalEntropy)->RangeMultiplier(2)->Range(2, 64);

void BM_LogicalDivergence(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const DensityMatrix rho = random_density(d, d, 6);
  const DensityMatrix sigma = random_density(d, d, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(logical_divergence(rho, sigma));
  }
}
BENCHMARK(BM_LogicalDivergence)->RangeMultiplier(2)->Range(2, 64);

void BM_TwirlSubsystemB(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  const BipartiteSplit split{2, b};
  const DensityMatrix rho = random_density(2 * b, 2 * b, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(twirl_subsystem_b(rho, split));
  }
}
BENCHMARK(BM_TwirlSubsystemB)->DenseRange(2, 6);

void BM_Measure(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(9);
  const DensityMatrix rho = random_density(d, d, rng);
  const ProjectiveMeasurement m = random_projective_measurement(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure(rho, m));
  }
}
BENCHMARK(BM_Measure)->RangeMultiplier(2)->Range(2, 16);

void BM_RunCheckKlein(benchmark::State& state) {
  CheckConfig config;
  config.trials = static_cast<int>(state.range(0));
  config.seed = 42;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_check(TheoremId::Klein, config));
  }
}
BENCHMARK(BM_RunCheckKlein)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();

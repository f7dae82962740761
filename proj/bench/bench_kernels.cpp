// Copyright 2026 The sepcheck Authors
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

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "sepcheck/kernels.hpp"
#include "sepcheck/oracle.hpp"
#include "sepcheck/state_factory.hpp"

using namespace sepcheck;

namespace {

std::vector<Complex> random_vector(std::size_t dim) {
  std::mt19937_64 engine(42);
  return haar_random_vector(dim, engine);
}

void BM_OuterProductParallel(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto psi = random_vector(dim);
  std::vector<Complex> out(dim * dim);
  for (auto _ : state) {
    kernels::accumulate_outer_product(0.5, psi, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["threads"] = omp_get_max_threads();
}

void BM_OuterProductSerial(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto psi = random_vector(dim);
  std::vector<Complex> out(dim * dim);
  for (auto _ : state) {
    kernels::accumulate_outer_product_serial(0.5, psi, out);
    benchmark::DoNotOptimize(out.data());
  }
}

OracleRunSpec oracle_spec(int n) {
  OracleRunSpec spec{.dims = SubsystemDims::qubits(n)};
  spec.samples = 500;
  spec.seed = 7;
  spec.modes = {SamplingMode::biseparable_mixed()};
  spec.criteria = {CriterionId::BisepQubit, CriterionId::WType};
  return spec;
}

void BM_SoundnessParallel(benchmark::State& state) {
  const auto spec = oracle_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_soundness(spec));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_SoundnessSerial(benchmark::State& state) {
  const auto spec = oracle_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_soundness_serial(spec));
}

}  // namespace

BENCHMARK(BM_OuterProductParallel)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_OuterProductSerial)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_SoundnessParallel)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SoundnessSerial)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

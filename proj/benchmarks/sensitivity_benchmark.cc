// Copyright 2026 The lwdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "lwdp/estimators.h"
#include "lwdp/local_view.h"
#include "lwdp/sensitivity.h"

namespace lwdp {
namespace {

// A node of degree d whose neighbors form a clique, so every incident edge
// carries d - 1 triangles.
SmoothSensInstance DenseInstance(int degree, EstimatorKind kind) {
  std::mt19937_64 rng(degree);
  std::uniform_int_distribution<Weight> weight(0, 10);
  LocalView view;
  for (int i = 0; i < degree; ++i) view.incident_weights.push_back(weight(rng));
  for (int a = 0; a < degree; ++a) {
    for (int b = a + 1; b < degree; ++b) {
      view.triangles.push_back({a, b, weight(rng)});
    }
  }
  return BuildSmoothSensInstance(view, 22, 1.0 / 6.0,
                                 Estimator::Create(kind, 0.3678794411714423));
}

void BM_SmoothSensitivityBiased(benchmark::State& state) {
  const SmoothSensInstance inst =
      DenseInstance(static_cast<int>(state.range(0)), EstimatorKind::kBiased);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SmoothSensitivityBiased(inst));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SmoothSensitivityBiased)
    ->Arg(32)->Arg(63)->Arg(125)->Arg(250)->Arg(500)
    ->Unit(benchmark::kMillisecond);

void BM_SmoothSensitivityUnbiased(benchmark::State& state) {
  const SmoothSensInstance inst =
      DenseInstance(static_cast<int>(state.range(0)), EstimatorKind::kUnbiased);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SmoothSensitivityUnbiased(inst));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SmoothSensitivityUnbiased)
    ->Arg(32)->Arg(63)->Arg(125)->Arg(250)->Arg(500)
    ->Unit(benchmark::kMillisecond);

void BM_SmoothSensitivityBruteForce(benchmark::State& state) {
  const SmoothSensInstance inst =
      DenseInstance(static_cast<int>(state.range(0)), EstimatorKind::kUnbiased);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SmoothSensitivityBruteForce(inst));
  }
}
BENCHMARK(BM_SmoothSensitivityBruteForce)->DenseRange(4, 12, 4);

}  // namespace
}  // namespace lwdp

BENCHMARK_MAIN();

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
#include <vector>

#include "benchmark/benchmark.h"
#include "lwdp/assignment.h"
#include "lwdp/experiments.h"
#include "lwdp/graph.h"
#include "lwdp/protocol.h"

namespace lwdp {
namespace {

WeightedGraph Synthetic(NodeId n, double density) {
  SyntheticConfig config;
  config.nodes = n;
  config.density = density;
  config.seed = 1;
  return GenerateSynthetic(config);
}

void BM_EnumerateTriangles(benchmark::State& state) {
  const WeightedGraph g = Synthetic(static_cast<NodeId>(state.range(0)), 0.5);
  std::size_t count = 0;
  for (auto _ : state) {
    count = EnumerateTriangles(g).size();
    benchmark::DoNotOptimize(count);
  }
  state.counters["triangles"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateTriangles)->Arg(100)->Arg(200)->Arg(278)
    ->Unit(benchmark::kMillisecond);

void BM_GreedyAssign(benchmark::State& state) {
  const WeightedGraph g = Synthetic(static_cast<NodeId>(state.range(0)), 0.5);
  const std::vector<Triangle> triangles = EnumerateTriangles(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(GreedyAssign(g, triangles).loads().data());
  }
  state.counters["triangles"] = static_cast<double>(triangles.size());
}
BENCHMARK(BM_GreedyAssign)->Arg(100)->Arg(200)->Arg(278)
    ->Unit(benchmark::kMillisecond);

void BM_TwoStepSmoothUnbiased(benchmark::State& state) {
  const ProtocolContext ctx(Synthetic(static_cast<NodeId>(state.range(0)), 0.5));
  const Weight lambda = DefaultLambda(ctx.graph(), ctx.triangles());
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        RunTwoStep(ctx, lambda, PrivacyBudget::EvenSplit(2.0),
                   EstimatorKind::kUnbiased,
                   ReleaseMechanism::kSmoothSensitivity, RandomSource(seed++))
            .estimate);
  }
  state.counters["triangles"] = static_cast<double>(ctx.triangles().size());
}
BENCHMARK(BM_TwoStepSmoothUnbiased)->Arg(100)->Arg(200)
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace lwdp

BENCHMARK_MAIN();

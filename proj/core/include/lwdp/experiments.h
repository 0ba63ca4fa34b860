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

#ifndef LWDP_EXPERIMENTS_H_
#define LWDP_EXPERIMENTS_H_

#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lwdp/graph.h"
#include "lwdp/mechanisms.h"
#include "lwdp/protocol.h"

namespace lwdp {

inline constexpr std::int64_t kDefaultTotalCalls = 20000;

// Converts interaction intensities to integer call counts L * I_e / sum(I).
// Fractions are rounded by largest remainder (ties to the lower index), so the
// weights sum to exactly L. Throws ValidationError for nonpositive intensities,
// an empty input, or negative L.
std::vector<Weight> MilanScaleWeights(std::span<const double> intensities,
                                      std::int64_t total_calls =
                                          kDefaultTotalCalls);

enum class WeightDistribution {
  // Uniform on [weight_min, weight_max].
  kUniform,
  // weight_min + Geometric(weight_geometric_p) failures, capped at weight_max.
  kGeometric,
};

struct SyntheticConfig {
  NodeId nodes = 0;
  // Independent probability of each possible edge.
  double density = 0.5;
  Weight weight_min = 0;
  Weight weight_max = 10;
  WeightDistribution distribution = WeightDistribution::kUniform;
  double weight_geometric_p = 0.5;
  std::uint64_t seed = 0;
};

// Erdos-Renyi graph with random integer weights. Deterministic in the config.
// Throws ConfigError for invalid parameters.
WeightedGraph GenerateSynthetic(const SyntheticConfig& config);

// Subgraph induced by `size` nodes drawn uniformly without replacement,
// relabeled to [0, size) in increasing original id order.
WeightedGraph InducedSubgraph(const WeightedGraph& graph, NodeId size,
                              std::uint64_t seed);

// Triangle weight at position floor(0.9 |triangles|) of the sorted weights,
// so roughly a tenth of the triangles sit at or above it. 0 when there are no
// triangles.
Weight DefaultLambda(const WeightedGraph& graph,
                     std::span<const Triangle> triangles);

enum class Method {
  kBaseline,
  kGlobalBiased,
  kGlobalUnbiased,
  kSmoothBiased,
  kSmoothUnbiased,
};

inline constexpr Method kAllMethods[] = {
    Method::kBaseline, Method::kGlobalBiased, Method::kGlobalUnbiased,
    Method::kSmoothBiased, Method::kSmoothUnbiased};

// "baseline", "global_biased", "global_unbiased", "smooth_biased",
// "smooth_unbiased". Parse also accepts '-' for '_'.
std::string_view MethodName(Method method);
Method ParseMethod(std::string_view name);

// Estimated count from one run of `method`. The two-round methods split
// epsilon evenly; the baseline spends all of it on the weight release.
double RunMethod(const ProtocolContext& context, Method method, Weight lambda,
                 double epsilon, const RandomSource& source);

enum class SweepAxis { kEpsilon, kLambda, kSize };

std::string_view SweepAxisName(SweepAxis axis);
// Accepts "eps", "epsilon", "lambda", "size".
SweepAxis ParseSweepAxis(std::string_view name);

struct ExperimentConfig {
  SweepAxis axis = SweepAxis::kEpsilon;
  std::vector<double> values;
  int trials = 10;
  std::vector<Method> methods{std::begin(kAllMethods), std::end(kAllMethods)};
  std::uint64_t seed = 0;
  // Used when the axis is not epsilon.
  double epsilon = 2.0;
  // Used when the axis is not lambda; DefaultLambda of the swept graph if
  // unset.
  std::optional<Weight> lambda;

  // Throws ConfigError if trials < 1, values or methods are empty, or a
  // value is invalid for the axis.
  void Validate() const;
};

struct ErrorRow {
  double x = 0.0;
  // Mean exact count over the trials at this point.
  double exact = 0.0;
  // Set when some trial had an exact count of 0; errors are then NaN.
  bool flagged = false;
  // Mean of |r - p| / r per method, in config order.
  std::vector<double> mean_relative_error;
};

struct ErrorReport {
  std::vector<Method> methods;
  std::vector<ErrorRow> rows;

  // Header "x,<method>_l2_rel,...", one row per axis value, NaN as "nan".
  std::string ToCsv() const;
};

using SourceFactory = std::function<RandomSource(std::uint64_t seed)>;

// For every axis value and trial, runs each method with the same random
// source, so all methods see identical first-round noise. Rows follow
// ascending axis value.
ErrorReport RunSweep(const ExperimentConfig& config,
                     const WeightedGraph& graph,
                     const SourceFactory& make_source = {});

}  // namespace lwdp

#endif  // LWDP_EXPERIMENTS_H_

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

#include "lwdp/experiments.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include "lwdp/error.h"

namespace lwdp {
namespace {

// Labels for harness-level streams.
constexpr std::uint64_t kGraphStream = 0x67726170ULL;
constexpr std::uint64_t kSampleStream = 0x73616d70ULL;

bool Integral(double v) { return std::isfinite(v) && std::floor(v) == v; }

}  // namespace

std::vector<Weight> MilanScaleWeights(std::span<const double> intensities,
                                      std::int64_t total_calls) {
  if (intensities.empty()) throw ValidationError("no intensities given");
  if (total_calls < 0) throw ValidationError("total calls must be >= 0");
  double sum = 0.0;
  for (double v : intensities) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ValidationError("intensities must be positive and finite");
    }
    sum += v;
  }
  const std::size_t n = intensities.size();
  std::vector<Weight> out(n);
  std::vector<std::pair<double, std::size_t>> remainder(n);
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double exact = static_cast<double>(total_calls) * intensities[i] / sum;
    out[i] = static_cast<Weight>(std::floor(exact));
    remainder[i] = {exact - std::floor(exact), i};
    assigned += out[i];
  }
  std::stable_sort(remainder.begin(), remainder.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  // Floating rounding can leave the floors off by more than n in principle;
  // clamp the leftover to what the remainders can absorb.
  std::int64_t leftover = std::clamp<std::int64_t>(
      total_calls - assigned, 0, static_cast<std::int64_t>(n));
  for (std::size_t k = 0; k < static_cast<std::size_t>(leftover); ++k) {
    ++out[remainder[k].second];
  }
  return out;
}

WeightedGraph GenerateSynthetic(const SyntheticConfig& config) {
  if (config.nodes < 0) throw ConfigError("node count must be >= 0");
  if (!(config.density >= 0.0 && config.density <= 1.0)) {
    throw ConfigError("density must lie in [0,1]");
  }
  if (config.weight_min > config.weight_max) {
    throw ConfigError("weight_min exceeds weight_max");
  }
  if (config.distribution == WeightDistribution::kGeometric &&
      !(config.weight_geometric_p > 0.0 && config.weight_geometric_p <= 1.0)) {
    throw ConfigError("geometric weight parameter must lie in (0,1]");
  }
  NoiseStream stream = RandomSource(config.seed).Stream(kGraphStream);
  std::mt19937_64& rng = stream.engine();
  std::bernoulli_distribution keep(config.density);
  std::uniform_int_distribution<Weight> uniform(config.weight_min,
                                                config.weight_max);
  std::geometric_distribution<Weight> geometric(config.weight_geometric_p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < config.nodes; ++u) {
    for (NodeId v = u + 1; v < config.nodes; ++v) {
      if (!keep(rng)) continue;
      Weight w = 0;
      if (config.distribution == WeightDistribution::kUniform) {
        w = uniform(rng);
      } else {
        w = std::min(config.weight_max, config.weight_min + geometric(rng));
      }
      edges.push_back({u, v, w});
    }
  }
  return WeightedGraph(config.nodes, edges);
}

WeightedGraph InducedSubgraph(const WeightedGraph& graph, NodeId size,
                              std::uint64_t seed) {
  if (size < 0 || size > graph.node_count()) {
    throw ConfigError("subgraph size must lie in [0, node_count]");
  }
  std::vector<NodeId> nodes(graph.node_count());
  std::iota(nodes.begin(), nodes.end(), 0);
  NoiseStream stream = RandomSource(seed).Stream(kSampleStream);
  std::shuffle(nodes.begin(), nodes.end(), stream.engine());
  nodes.resize(size);
  std::sort(nodes.begin(), nodes.end());
  std::vector<NodeId> relabel(graph.node_count(), -1);
  for (NodeId i = 0; i < size; ++i) relabel[nodes[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) {
    if (relabel[e.u] >= 0 && relabel[e.v] >= 0) {
      edges.push_back({relabel[e.u], relabel[e.v], e.weight});
    }
  }
  return WeightedGraph(size, edges);
}

Weight DefaultLambda(const WeightedGraph& graph,
                     std::span<const Triangle> triangles) {
  if (triangles.empty()) return 0;
  std::vector<Weight> weights;
  weights.reserve(triangles.size());
  for (const Triangle& t : triangles) weights.push_back(TriangleWeight(graph, t));
  const std::size_t pos = std::min(
      weights.size() - 1,
      static_cast<std::size_t>(std::floor(0.9 * static_cast<double>(weights.size()))));
  std::nth_element(weights.begin(), weights.begin() + pos, weights.end());
  return weights[pos];
}

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kBaseline:
      return "baseline";
    case Method::kGlobalBiased:
      return "global_biased";
    case Method::kGlobalUnbiased:
      return "global_unbiased";
    case Method::kSmoothBiased:
      return "smooth_biased";
    case Method::kSmoothUnbiased:
      return "smooth_unbiased";
  }
  return "unknown";
}

Method ParseMethod(std::string_view name) {
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  for (Method m : kAllMethods) {
    if (MethodName(m) == normalized) return m;
  }
  throw ConfigError("unknown method '" + std::string(name) + "'");
}

double RunMethod(const ProtocolContext& context, Method method, Weight lambda,
                 double epsilon, const RandomSource& source) {
  if (method == Method::kBaseline) {
    return RunBaseline(context, lambda, epsilon, source).estimate;
  }
  const PrivacyBudget budget = PrivacyBudget::EvenSplit(epsilon);
  const bool biased =
      method == Method::kGlobalBiased || method == Method::kSmoothBiased;
  const bool global =
      method == Method::kGlobalBiased || method == Method::kGlobalUnbiased;
  return RunTwoStep(context, lambda, budget,
                    biased ? EstimatorKind::kBiased : EstimatorKind::kUnbiased,
                    global ? ReleaseMechanism::kGlobalLaplace
                           : ReleaseMechanism::kSmoothSensitivity,
                    source)
      .estimate;
}

std::string_view SweepAxisName(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kEpsilon:
      return "eps";
    case SweepAxis::kLambda:
      return "lambda";
    case SweepAxis::kSize:
      return "size";
  }
  return "unknown";
}

SweepAxis ParseSweepAxis(std::string_view name) {
  if (name == "eps" || name == "epsilon") return SweepAxis::kEpsilon;
  if (name == "lambda") return SweepAxis::kLambda;
  if (name == "size") return SweepAxis::kSize;
  throw ConfigError("unknown sweep axis '" + std::string(name) + "'");
}

void ExperimentConfig::Validate() const {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (values.empty()) throw ConfigError("axis values must be nonempty");
  if (methods.empty()) throw ConfigError("at least one method is required");
  for (double v : values) {
    switch (axis) {
      case SweepAxis::kEpsilon:
        if (!(v > 0.0) || !std::isfinite(v)) {
          throw ConfigError("epsilon values must be positive");
        }
        break;
      case SweepAxis::kLambda:
        if (!Integral(v)) throw ConfigError("lambda values must be integers");
        break;
      case SweepAxis::kSize:
        if (!Integral(v) || v < 0) {
          throw ConfigError("size values must be nonnegative integers");
        }
        break;
    }
  }
  if (axis != SweepAxis::kEpsilon && (!(epsilon > 0.0) || !std::isfinite(epsilon))) {
    throw ConfigError("epsilon must be positive");
  }
}

std::string ErrorReport::ToCsv() const {
  std::ostringstream out;
  out.precision(10);
  out << "x";
  for (Method m : methods) out << ',' << MethodName(m) << "_l2_rel";
  out << '\n';
  for (const ErrorRow& row : rows) {
    out << row.x;
    for (double e : row.mean_relative_error) {
      out << ',';
      if (std::isnan(e)) {
        out << "nan";
      } else {
        out << e;
      }
    }
    out << '\n';
  }
  return out.str();
}

ErrorReport RunSweep(const ExperimentConfig& config,
                     const WeightedGraph& graph,
                     const SourceFactory& make_source) {
  config.Validate();
  const SourceFactory factory =
      make_source ? make_source
                  : [](std::uint64_t seed) { return RandomSource(seed); };
  std::vector<double> values = config.values;
  std::sort(values.begin(), values.end());

  ErrorReport report;
  report.methods = config.methods;
  const std::size_t n_methods = config.methods.size();
  // Built once and shared by every point unless the axis resamples it.
  std::optional<ProtocolContext> full;
  if (config.axis != SweepAxis::kSize) full.emplace(graph);

  for (double x : values) {
    ErrorRow row;
    row.x = x;
    std::vector<double> error_sum(n_methods, 0.0);
    double exact_sum = 0.0;
    for (int trial = 0; trial < config.trials; ++trial) {
      std::optional<ProtocolContext> sampled;
      if (config.axis == SweepAxis::kSize) {
        sampled.emplace(InducedSubgraph(
            graph, static_cast<NodeId>(x),
            Mix64(config.seed ^ Mix64(static_cast<std::uint64_t>(x))) +
                static_cast<std::uint64_t>(trial)));
      }
      const ProtocolContext& context = sampled ? *sampled : *full;
      double epsilon = config.epsilon;
      Weight lambda = 0;
      if (config.axis == SweepAxis::kEpsilon) epsilon = x;
      if (config.axis == SweepAxis::kLambda) {
        lambda = static_cast<Weight>(x);
      } else {
        lambda = config.lambda ? *config.lambda
                               : DefaultLambda(context.graph(),
                                               context.triangles());
      }
      const double exact = static_cast<double>(context.ExactCount(lambda));
      exact_sum += exact;
      if (exact == 0.0) row.flagged = true;
      // Same source for every method: paired first-round noise.
      const RandomSource source =
          factory(RandomSource(config.seed).Fork(trial).seed());
      for (std::size_t k = 0; k < n_methods; ++k) {
        if (row.flagged) break;
        const double estimate =
            RunMethod(context, config.methods[k], lambda, epsilon, source);
        error_sum[k] += std::abs(exact - estimate) / exact;
      }
    }
    row.exact = exact_sum / config.trials;
    row.mean_relative_error.resize(n_methods);
    for (std::size_t k = 0; k < n_methods; ++k) {
      row.mean_relative_error[k] =
          row.flagged ? std::numeric_limits<double>::quiet_NaN()
                      : error_sum[k] / config.trials;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace lwdp

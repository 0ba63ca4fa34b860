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

#include "lwdp/protocol.h"

#include <cmath>
#include <string>
#include <utility>

#include "lwdp/error.h"
#include "lwdp/local_view.h"
#include "lwdp/sensitivity.h"
#include "parallel.h"

namespace lwdp {
namespace {

std::int64_t UploadedValues(const NoisyRelease& release) {
  std::int64_t total = 0;
  for (const auto& v : release.node_vectors) {
    total += static_cast<std::int64_t>(v.size());
  }
  return total;
}

}  // namespace

std::string_view ReleaseMechanismName(ReleaseMechanism mechanism) {
  return mechanism == ReleaseMechanism::kGlobalLaplace ? "global" : "smooth";
}

ReleaseMechanism ParseReleaseMechanism(std::string_view name) {
  if (name == "global") return ReleaseMechanism::kGlobalLaplace;
  if (name == "smooth") return ReleaseMechanism::kSmoothSensitivity;
  throw ConfigError("unknown mechanism '" + std::string(name) + "'");
}

NoisyRelease ReleaseWeights(const WeightedGraph& graph, double epsilon_1,
                            const RandomSource& source) {
  const NodeId n = graph.node_count();
  NoisyRelease release;
  release.node_vectors.resize(n);
  internal::ParallelFor(n, [&](std::int64_t i) {
    const NodeId v = static_cast<NodeId>(i);
    NoiseStream stream = source.Stream(v, Round::kWeightRelease);
    const std::vector<Weight> own = graph.IncidentWeights(v);
    release.node_vectors[v] = PrivatizeWeightVector(own, epsilon_1, stream);
  });
  release.symmetrized.assign(graph.edge_count(), 0);
  for (NodeId v = 0; v < n; ++v) {
    const auto adj = graph.neighbors(v);
    for (std::size_t k = 0; k < adj.size(); ++k) {
      if (graph.edge(adj[k].edge).u == v) {
        release.symmetrized[adj[k].edge] = release.node_vectors[v][k];
      }
    }
  }
  return release;
}

std::vector<Weight> ServerMessage(const Assignment& assignment,
                                  const NoisyRelease& release, NodeId v) {
  const auto mine = assignment.triangles_of(v);
  std::vector<Weight> out;
  out.reserve(mine.size());
  for (std::int32_t idx : mine) {
    out.push_back(release.symmetrized[assignment.noisy_edge(idx)]);
  }
  return out;
}

NodeRelease ReleaseLocalCount(const WeightedGraph& topology,
                              const Assignment& assignment, NodeId v,
                              std::span<const Weight> own_weights,
                              std::span<const Weight> received, Weight lambda,
                              const PrivacyBudget& budget,
                              const Estimator& estimator,
                              ReleaseMechanism mechanism, NoiseStream& stream) {
  const LocalView view =
      MakeLocalView(topology, assignment, v, own_weights, received);
  NodeRelease out;
  out.local_count = LocalCount(view, estimator, lambda);
  if (mechanism == ReleaseMechanism::kGlobalLaplace) {
    out.sensitivity = GlobalSensitivity(view, estimator);
    out.released = out.local_count;
    if (out.sensitivity > 0.0) {
      out.released +=
          LaplaceSample(out.sensitivity / budget.epsilon_2(), stream);
    }
    return out;
  }
  const SmoothNoiseConfig config =
      SmoothNoiseConfig::Create(budget.epsilon_2());
  const SmoothSensInstance instance =
      BuildSmoothSensInstance(view, lambda, config.beta(), estimator);
  out.sensitivity = SmoothSensitivity(instance);
  out.released = out.local_count;
  if (out.sensitivity > 0.0) {
    out.released += config.scale_multiplier() * out.sensitivity *
                    SmoothNoiseSample(config, stream);
  }
  return out;
}

MessageCounts CommunicationReport(const RunReport& run) {
  return run.messages;
}

ProtocolContext::ProtocolContext(WeightedGraph graph)
    : graph_(std::move(graph)),
      triangles_(EnumerateTriangles(graph_)),
      assignment_(GreedyAssign(graph_, triangles_)) {}

std::int64_t ProtocolContext::ExactCount(Weight lambda) const {
  return ExactBelowThresholdCount(graph_, triangles_, lambda);
}

RunReport RunTwoStep(const ProtocolContext& context, Weight lambda,
                     const PrivacyBudget& budget, EstimatorKind kind,
                     ReleaseMechanism mechanism, const RandomSource& source) {
  const WeightedGraph& graph = context.graph();
  const NodeId n = graph.node_count();
  if (n == 0) throw ConfigError("the graph has no nodes");
  const Estimator estimator = Estimator::Create(kind, budget.p());

  // Round one: weights go up, the server symmetrizes.
  const NoisyRelease release = ReleaseWeights(graph, budget.epsilon_1(), source);

  // Round two: each node sees its own weights and the server's message only.
  RunReport report;
  report.nodes.resize(n);
  std::vector<std::int64_t> downloads(n, 0);
  const Assignment& assignment = context.assignment();
  internal::ParallelFor(n, [&](std::int64_t i) {
    const NodeId v = static_cast<NodeId>(i);
    const std::vector<Weight> own = graph.IncidentWeights(v);
    const std::vector<Weight> received = ServerMessage(assignment, release, v);
    downloads[v] = static_cast<std::int64_t>(received.size());
    NoiseStream stream = source.Stream(v, Round::kCountRelease);
    report.nodes[v] =
        ReleaseLocalCount(graph, assignment, v, own, received, lambda, budget,
                          estimator, mechanism, stream);
  });

  for (const NodeRelease& node : report.nodes) report.estimate += node.released;
  report.exact_count = context.ExactCount(lambda);
  report.messages.weight_uploads = UploadedValues(release);
  for (std::int64_t d : downloads) report.messages.noisy_downloads += d;
  report.messages.count_uploads = static_cast<std::int64_t>(report.nodes.size());
  report.budget_ledger.assign(
      n, {{Round::kWeightRelease, budget.epsilon_1()},
          {Round::kCountRelease, budget.epsilon_2()}});
  return report;
}

RunReport RunTwoStep(const WeightedGraph& graph, Weight lambda,
                     const PrivacyBudget& budget, EstimatorKind kind,
                     ReleaseMechanism mechanism, const RandomSource& source) {
  return RunTwoStep(ProtocolContext(graph), lambda, budget, kind, mechanism,
                    source);
}

RunReport RunBaseline(const ProtocolContext& context, Weight lambda,
                      double epsilon, const RandomSource& source) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ConfigError("epsilon must be positive");
  }
  const WeightedGraph& graph = context.graph();
  const NoisyRelease release = ReleaseWeights(graph, epsilon, source);
  RunReport report;
  std::int64_t count = 0;
  for (const Triangle& t : context.triangles()) {
    const Weight w = release.symmetrized[t.edges[0]] +
                     release.symmetrized[t.edges[1]] +
                     release.symmetrized[t.edges[2]];
    if (w < lambda) ++count;
  }
  report.estimate = static_cast<double>(count);
  report.exact_count = context.ExactCount(lambda);
  report.messages.weight_uploads = UploadedValues(release);
  report.budget_ledger.assign(graph.node_count(),
                              {{Round::kWeightRelease, epsilon}});
  return report;
}

RunReport RunBaseline(const WeightedGraph& graph, Weight lambda,
                      double epsilon, const RandomSource& source) {
  return RunBaseline(ProtocolContext(graph), lambda, epsilon, source);
}

}  // namespace lwdp

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

#ifndef LWDP_PROTOCOL_H_
#define LWDP_PROTOCOL_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "lwdp/assignment.h"
#include "lwdp/estimators.h"
#include "lwdp/graph.h"
#include "lwdp/mechanisms.h"

namespace lwdp {

// How a node releases its local count in the second round.
enum class ReleaseMechanism {
  // Laplace noise scaled to the global sensitivity.
  kGlobalLaplace,
  // Heavy-tailed noise scaled to the beta-smooth sensitivity.
  kSmoothSensitivity,
};

std::string_view ReleaseMechanismName(ReleaseMechanism mechanism);
// Accepts "global" or "smooth"; throws ConfigError otherwise.
ReleaseMechanism ParseReleaseMechanism(std::string_view name);

// Output of the first round.
struct NoisyRelease {
  // Noisy incident-weight vector of every node, ordered like neighbors(v).
  std::vector<std::vector<Weight>> node_vectors;
  // One public noisy weight per edge. For {a, b} with a < b the value reported
  // by a is kept.
  std::vector<Weight> symmetrized;
};

// Every node privatizes its incident weights with DLap(exp(-epsilon_1)),
// drawing from its (node, kWeightRelease) stream; the server symmetrizes.
NoisyRelease ReleaseWeights(const WeightedGraph& graph, double epsilon_1,
                            const RandomSource& source);

// What the server sends to v: the symmetrized noisy weight of the unseen edge
// of each triangle assigned to v, in assignment.triangles_of(v) order.
std::vector<Weight> ServerMessage(const Assignment& assignment,
                                  const NoisyRelease& release, NodeId v);

struct NodeRelease {
  double local_count = 0.0;
  double sensitivity = 0.0;
  double released = 0.0;
};

// Second-round work of one node. Reads only its own weights, the public
// topology, the assignment, and the server's message.
NodeRelease ReleaseLocalCount(const WeightedGraph& topology,
                              const Assignment& assignment, NodeId v,
                              std::span<const Weight> own_weights,
                              std::span<const Weight> received, Weight lambda,
                              const PrivacyBudget& budget,
                              const Estimator& estimator,
                              ReleaseMechanism mechanism, NoiseStream& stream);

struct MessageCounts {
  // Noisy weights uploaded in the first round (sum of degrees).
  std::int64_t weight_uploads = 0;
  // Noisy weights sent by the server (one per assigned triangle).
  std::int64_t noisy_downloads = 0;
  // Counts uploaded in the second round (one per node).
  std::int64_t count_uploads = 0;

  friend bool operator==(const MessageCounts&, const MessageCounts&) = default;
};

struct BudgetCharge {
  Round round;
  double epsilon;
};

struct RunReport {
  double estimate = 0.0;
  std::int64_t exact_count = 0;
  std::vector<NodeRelease> nodes;
  MessageCounts messages;
  // Privacy charges per node, in query order.
  std::vector<std::vector<BudgetCharge>> budget_ledger;
};

// Message tallies of a finished run.
MessageCounts CommunicationReport(const RunReport& run);

// Public, noise-free state shared by every run on one graph: the triangle
// list and the greedy assignment.
class ProtocolContext {
 public:
  explicit ProtocolContext(WeightedGraph graph);

  const WeightedGraph& graph() const { return graph_; }
  std::span<const Triangle> triangles() const { return triangles_; }
  const Assignment& assignment() const { return assignment_; }
  std::int64_t ExactCount(Weight lambda) const;

 private:
  WeightedGraph graph_;
  std::vector<Triangle> triangles_;
  Assignment assignment_;
};

// The two-round protocol. Throws ConfigError if the graph has no nodes.
RunReport RunTwoStep(const ProtocolContext& context, Weight lambda,
                     const PrivacyBudget& budget, EstimatorKind kind,
                     ReleaseMechanism mechanism, const RandomSource& source);
RunReport RunTwoStep(const WeightedGraph& graph, Weight lambda,
                     const PrivacyBudget& budget, EstimatorKind kind,
                     ReleaseMechanism mechanism, const RandomSource& source);

// One-round baseline: release all weights with DLap(exp(-epsilon)) and count
// below-threshold triangles of the noisy graph. Throws ConfigError unless
// epsilon > 0.
RunReport RunBaseline(const ProtocolContext& context, Weight lambda,
                      double epsilon, const RandomSource& source);
RunReport RunBaseline(const WeightedGraph& graph, Weight lambda,
                      double epsilon, const RandomSource& source);

}  // namespace lwdp

#endif  // LWDP_PROTOCOL_H_

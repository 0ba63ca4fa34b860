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

#include "lwdp/local_view.h"

#include <algorithm>
#include <string>

#include "lwdp/error.h"

namespace lwdp {
namespace {

int SlotOf(std::span<const Neighbor> adj, NodeId u) {
  auto it = std::lower_bound(
      adj.begin(), adj.end(), u,
      [](const Neighbor& n, NodeId target) { return n.node < target; });
  if (it == adj.end() || it->node != u) {
    throw StructuralError("node " + std::to_string(u) +
                          " is not adjacent to the responsible node");
  }
  return static_cast<int>(it - adj.begin());
}

}  // namespace

LocalView MakeLocalView(const WeightedGraph& topology,
                        const Assignment& assignment, NodeId v,
                        std::span<const Weight> own_weights,
                        std::span<const Weight> received) {
  const auto adj = topology.neighbors(v);
  if (own_weights.size() != adj.size()) {
    throw ValidationError("weight vector of node " + std::to_string(v) +
                          " has the wrong length");
  }
  const auto mine = assignment.triangles_of(v);
  if (received.size() != mine.size()) {
    throw ValidationError("received weights do not match assigned triangles");
  }
  LocalView view;
  view.node = v;
  view.incident_weights.assign(own_weights.begin(), own_weights.end());
  view.triangles.reserve(mine.size());
  for (std::size_t k = 0; k < mine.size(); ++k) {
    const Triangle& t = assignment.triangle(mine[k]);
    NodeId others[2];
    int n = 0;
    for (NodeId a : t.nodes) {
      if (a != v) others[n++] = a;
    }
    view.triangles.push_back(
        {SlotOf(adj, others[0]), SlotOf(adj, others[1]), received[k]});
  }
  return view;
}

double LocalCount(const LocalView& view, const Estimator& estimator,
                  Weight lambda) {
  double total = 0.0;
  for (const LocalTriangle& t : view.triangles) {
    const Weight m = view.incident_weights[t.slot_a] +
                     view.incident_weights[t.slot_b] + t.noisy_weight;
    total += estimator.Evaluate(m, lambda);
  }
  return total;
}

}  // namespace lwdp

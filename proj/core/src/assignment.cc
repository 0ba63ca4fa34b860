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

#include "lwdp/assignment.h"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "lwdp/error.h"

namespace lwdp {

Assignment::Assignment(const WeightedGraph& graph,
                       std::vector<Triangle> triangles,
                       std::vector<std::int8_t> noisy_slot)
    : triangles_(std::move(triangles)), noisy_slot_(std::move(noisy_slot)) {
  if (triangles_.size() != noisy_slot_.size()) {
    throw ValidationError("one noisy slot per triangle required");
  }
  if (triangles_.size() >
      static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
    throw SizeError("too many triangles");
  }
  loads_.assign(graph.edge_count(), 0);
  const NodeId n = graph.node_count();
  node_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const int slot = noisy_slot_[t];
    if (slot < 0 || slot > 2) {
      throw ValidationError("noisy slot " + std::to_string(slot) +
                            " is not in {0,1,2}");
    }
    const EdgeId e = noisy_edge(t);
    const NodeId v = responsible(t);
    if (e < 0 || e >= graph.edge_count() || v < 0 || v >= n) {
      throw StructuralError("triangle does not belong to the graph");
    }
    ++loads_[e];
    ++node_offsets_[v + 1];
  }
  for (NodeId v = 0; v < n; ++v) node_offsets_[v + 1] += node_offsets_[v];
  by_node_.resize(triangles_.size());
  std::vector<std::int64_t> cursor(node_offsets_.begin(),
                                   node_offsets_.end() - 1);
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    by_node_[cursor[responsible(t)]++] = static_cast<std::int32_t>(t);
  }
}

Assignment GreedyAssign(const WeightedGraph& graph,
                        std::vector<Triangle> triangles) {
  if (!std::is_sorted(triangles.begin(), triangles.end())) {
    std::sort(triangles.begin(), triangles.end());
  }
  std::vector<std::int64_t> load(graph.edge_count(), 0);
  std::vector<std::int8_t> slots(triangles.size());
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const auto& edges = triangles[t].edges;
    // Slots are in ascending EdgeId order, so a strict comparison keeps the
    // lowest id among equal loads.
    int best = 0;
    for (int s = 1; s < 3; ++s) {
      if (load[edges[s]] < load[edges[best]]) best = s;
    }
    ++load[edges[best]];
    slots[t] = static_cast<std::int8_t>(best);
  }
  return Assignment(graph, std::move(triangles), std::move(slots));
}

std::int64_t CountC4Instances(const Assignment& assignment) {
  std::int64_t total = 0;
  for (std::int64_t l : assignment.loads()) total += l * (l - 1) / 2;
  return total;
}

std::int64_t SquaredLoad(const Assignment& assignment) {
  std::int64_t total = 0;
  for (std::int64_t l : assignment.loads()) total += l * l;
  return total;
}

namespace {

struct Search {
  const std::vector<Triangle>* triangles;
  std::vector<std::int64_t> load;
  std::vector<std::int8_t> current;
  std::vector<std::int8_t> best;
  std::int64_t best_value = std::numeric_limits<std::int64_t>::max();

  // `value` is the squared load of the prefix assigned so far. Loads only
  // grow, so a partial value at or above the incumbent can be pruned.
  void Run(std::size_t depth, std::int64_t value) {
    if (value >= best_value) return;
    if (depth == triangles->size()) {
      best_value = value;
      best = current;
      return;
    }
    for (int s = 0; s < 3; ++s) {
      const EdgeId e = (*triangles)[depth].edges[s];
      const std::int64_t l = load[e];
      load[e] = l + 1;
      current[depth] = static_cast<std::int8_t>(s);
      Run(depth + 1, value + 2 * l + 1);
      load[e] = l;
    }
  }
};

}  // namespace

OptimalAssignment BruteForceOptimalAssign(const WeightedGraph& graph,
                                          std::vector<Triangle> triangles) {
  if (triangles.size() > kMaxExhaustiveTriangles) {
    throw SizeError("exhaustive assignment supports at most " +
                    std::to_string(kMaxExhaustiveTriangles) +
                    " triangles, got " + std::to_string(triangles.size()));
  }
  std::sort(triangles.begin(), triangles.end());
  Search search;
  search.triangles = &triangles;
  search.load.assign(graph.edge_count(), 0);
  search.current.assign(triangles.size(), 0);
  search.Run(0, 0);
  OptimalAssignment out;
  out.squared_load = search.best_value;
  out.assignment =
      Assignment(graph, std::move(triangles), std::move(search.best));
  return out;
}

}  // namespace lwdp

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

#ifndef LWDP_ASSIGNMENT_H_
#define LWDP_ASSIGNMENT_H_

#include <cstdint>
#include <span>
#include <vector>

#include "lwdp/graph.h"

namespace lwdp {

// Maps every triangle to the node responsible for counting it.
//
// The responsible node of a triangle is the endpoint opposite its "noisy"
// edge: the one edge it cannot see privately and must receive from the
// server. Triangles are addressed by their index in triangles().
class Assignment {
 public:
  Assignment() = default;

  // `noisy_slot[i]` in {0,1,2} selects triangles[i].edges[slot] as the noisy
  // edge. Throws ValidationError on a slot outside {0,1,2} or size mismatch.
  Assignment(const WeightedGraph& graph, std::vector<Triangle> triangles,
             std::vector<std::int8_t> noisy_slot);

  std::size_t triangle_count() const { return triangles_.size(); }
  std::span<const Triangle> triangles() const { return triangles_; }
  const Triangle& triangle(std::size_t t) const { return triangles_[t]; }

  int noisy_slot(std::size_t t) const { return noisy_slot_[t]; }
  EdgeId noisy_edge(std::size_t t) const {
    return triangles_[t].edges[noisy_slot_[t]];
  }
  NodeId responsible(std::size_t t) const {
    return triangles_[t].OppositeNode(noisy_slot_[t]);
  }

  // l(e) for every edge, indexed by EdgeId.
  std::span<const std::int64_t> loads() const { return loads_; }

  // Indices of the triangles assigned to v, ascending.
  std::span<const std::int32_t> triangles_of(NodeId v) const {
    return {by_node_.data() + node_offsets_[v],
            by_node_.data() + node_offsets_[v + 1]};
  }

 private:
  std::vector<Triangle> triangles_;
  std::vector<std::int8_t> noisy_slot_;
  std::vector<std::int64_t> loads_;
  std::vector<std::int64_t> node_offsets_{0};
  std::vector<std::int32_t> by_node_;
};

// Load-balancing assignment. Triangles are processed in canonical sorted
// order; each takes the edge with the smallest current load, ties going to
// the lowest EdgeId. Constant work per triangle.
Assignment GreedyAssign(const WeightedGraph& graph,
                        std::vector<Triangle> triangles);

// Number of unordered pairs of triangles sharing a noisy edge,
// sum over e of l(e) choose 2.
std::int64_t CountC4Instances(const Assignment& assignment);

// Sum over e of l(e)^2.
std::int64_t SquaredLoad(const Assignment& assignment);

struct OptimalAssignment {
  Assignment assignment;
  std::int64_t squared_load = 0;
};

inline constexpr std::size_t kMaxExhaustiveTriangles = 12;

// Exhaustive search over all 3^|triangles| choices for the minimum squared
// load. Since sum l(e) is fixed, the same assignment also minimizes
// CountC4Instances. Throws SizeError above kMaxExhaustiveTriangles.
OptimalAssignment BruteForceOptimalAssign(const WeightedGraph& graph,
                                          std::vector<Triangle> triangles);

}  // namespace lwdp

#endif  // LWDP_ASSIGNMENT_H_

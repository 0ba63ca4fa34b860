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

#ifndef LWDP_GRAPH_H_
#define LWDP_GRAPH_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lwdp {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;
// Edge weights are application counts; negative values are allowed.
using Weight = std::int64_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Weight weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// One entry of a node's adjacency list.
struct Neighbor {
  NodeId node = 0;
  EdgeId edge = 0;
};

// Undirected weighted graph with dense node ids in [0, node_count).
//
// Edges are stored once, canonically oriented (u < v) and sorted
// lexicographically; an edge's id is its position in that order. Adjacency
// lists are sorted by neighbor id. The graph is immutable after construction
// and may be shared freely across threads.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Builds a graph from an unordered edge list. Endpoint order within an edge
  // is irrelevant. Throws ValidationError on out-of-range ids, self-loops or
  // duplicate edges.
  WeightedGraph(NodeId node_count, std::span<const Edge> edges);

  NodeId node_count() const { return node_count_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  Weight weight(EdgeId e) const { return edges_[e].weight; }

  std::span<const Neighbor> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  int degree(NodeId v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  int max_degree() const { return max_degree_; }

  // O(log d) lookup of the edge joining a and b.
  std::optional<EdgeId> FindEdge(NodeId a, NodeId b) const;

  // The private incident-weight vector w^v, ordered like neighbors(v).
  std::vector<Weight> IncidentWeights(NodeId v) const;

  // Same topology with every edge weight replaced; `weights` is indexed by
  // EdgeId.
  WeightedGraph WithWeights(std::span<const Weight> weights) const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  NodeId node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  int max_degree_ = 0;
};

// A triangle in canonical form: nodes sorted ascending and edges listed as
// {nodes[0],nodes[1]}, {nodes[0],nodes[2]}, {nodes[1],nodes[2]}, which is also
// ascending EdgeId order.
struct Triangle {
  std::array<NodeId, 3> nodes{};
  std::array<EdgeId, 3> edges{};

  // The node of the triangle that is not an endpoint of edges[slot].
  NodeId OppositeNode(int slot) const { return nodes[2 - slot]; }

  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle& a, const Triangle& b) {
    return a.nodes <=> b.nodes;
  }
};

// Resolves the three edges of {a, b, c}. Throws StructuralError if any edge is
// missing and ValidationError if the nodes are not distinct.
Triangle MakeTriangle(const WeightedGraph& graph, NodeId a, NodeId b,
                      NodeId c);

// Lists every triangle exactly once, sorted by node triple. Uses degree-ordered
// neighbor intersection, O(m * sqrt(m)).
std::vector<Triangle> EnumerateTriangles(const WeightedGraph& graph);

// w_T, the sum of the three edge weights. Throws StructuralError if the
// triangle's edges are not present in `graph`.
Weight TriangleWeight(const WeightedGraph& graph, const Triangle& triangle);

// Number of triangles whose weight is strictly below `lambda`.
std::int64_t ExactBelowThresholdCount(const WeightedGraph& graph,
                                      Weight lambda);
std::int64_t ExactBelowThresholdCount(const WeightedGraph& graph,
                                      std::span<const Triangle> triangles,
                                      Weight lambda);

}  // namespace lwdp

#endif  // LWDP_GRAPH_H_

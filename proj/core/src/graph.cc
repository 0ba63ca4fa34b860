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

#include "lwdp/graph.h"

#include <algorithm>
#include <string>
#include <utility>

#include "lwdp/error.h"

namespace lwdp {

WeightedGraph::WeightedGraph(NodeId node_count, std::span<const Edge> edges)
    : node_count_(node_count) {
  if (node_count < 0) throw ValidationError("negative node count");
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= node_count || e.v >= node_count) {
      throw ValidationError("edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "} has an endpoint outside [0," +
                            std::to_string(node_count) + ")");
    }
    if (e.u == e.v) {
      throw ValidationError("self-loop at node " + std::to_string(e.u));
    }
    edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw ValidationError("duplicate edge {" + std::to_string(edges_[i].u) +
                            "," + std::to_string(edges_[i].v) + "}");
    }
  }

  offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (NodeId v = 0; v < node_count; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(2 * edges_.size());
  std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[cursor[e.u]++] = {e.v, id};
    adjacency_[cursor[e.v]++] = {e.u, id};
  }
  // Edges are sorted by (u, v), so each list is already ordered for the
  // smaller endpoint; the larger-endpoint entries need an explicit sort.
  for (NodeId v = 0; v < node_count; ++v) {
    auto first = adjacency_.begin() + offsets_[v];
    auto last = adjacency_.begin() + offsets_[v + 1];
    std::sort(first, last, [](const Neighbor& a, const Neighbor& b) {
      return a.node < b.node;
    });
    max_degree_ = std::max(max_degree_, degree(v));
  }
}

std::optional<EdgeId> WeightedGraph::FindEdge(NodeId a, NodeId b) const {
  if (a < 0 || b < 0 || a >= node_count_ || b >= node_count_) {
    return std::nullopt;
  }
  if (degree(a) > degree(b)) std::swap(a, b);
  auto adj = neighbors(a);
  auto it = std::lower_bound(
      adj.begin(), adj.end(), b,
      [](const Neighbor& n, NodeId target) { return n.node < target; });
  if (it == adj.end() || it->node != b) return std::nullopt;
  return it->edge;
}

std::vector<Weight> WeightedGraph::IncidentWeights(NodeId v) const {
  std::vector<Weight> out;
  out.reserve(degree(v));
  for (const Neighbor& n : neighbors(v)) out.push_back(edges_[n.edge].weight);
  return out;
}

WeightedGraph WeightedGraph::WithWeights(std::span<const Weight> weights) const {
  if (weights.size() != edges_.size()) {
    throw ValidationError("weight vector length does not match edge count");
  }
  WeightedGraph copy = *this;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    copy.edges_[i].weight = weights[i];
  }
  return copy;
}

Triangle MakeTriangle(const WeightedGraph& graph, NodeId a, NodeId b,
                      NodeId c) {
  std::array<NodeId, 3> nodes{a, b, c};
  std::sort(nodes.begin(), nodes.end());
  if (nodes[0] == nodes[1] || nodes[1] == nodes[2]) {
    throw ValidationError("triangle nodes must be distinct");
  }
  Triangle t;
  t.nodes = nodes;
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (int slot = 0; slot < 3; ++slot) {
    auto [i, j] = pairs[slot];
    auto e = graph.FindEdge(nodes[i], nodes[j]);
    if (!e) {
      throw StructuralError("missing edge {" + std::to_string(nodes[i]) + "," +
                            std::to_string(nodes[j]) + "}");
    }
    t.edges[slot] = *e;
  }
  return t;
}

std::vector<Triangle> EnumerateTriangles(const WeightedGraph& graph) {
  const NodeId n = graph.node_count();
  // Orient every edge from lower to higher (degree, id) rank; each triangle is
  // then discovered exactly once from its lowest-ranked node.
  auto ranks_below = [&](NodeId a, NodeId b) {
    return std::pair(graph.degree(a), a) < std::pair(graph.degree(b), b);
  };
  std::vector<std::vector<Neighbor>> out(n);
  for (NodeId v = 0; v < n; ++v) {
    for (const Neighbor& nb : graph.neighbors(v)) {
      if (ranks_below(v, nb.node)) out[v].push_back(nb);
    }
  }

  std::vector<Triangle> triangles;
  std::vector<EdgeId> mark(n, -1);
  for (NodeId u = 0; u < n; ++u) {
    for (const Neighbor& nb : out[u]) mark[nb.node] = nb.edge;
    for (const Neighbor& uv : out[u]) {
      for (const Neighbor& vw : out[uv.node]) {
        const EdgeId uw = mark[vw.node];
        if (uw < 0) continue;
        // Found {u, v, w} with edges uv, vw, uw; canonicalize.
        std::array<std::pair<NodeId, NodeId>, 3> endpoints{
            {{u, uv.node}, {uv.node, vw.node}, {u, vw.node}}};
        std::array<EdgeId, 3> ids{uv.edge, vw.edge, uw};
        Triangle t;
        t.nodes = {u, uv.node, vw.node};
        std::sort(t.nodes.begin(), t.nodes.end());
        for (int k = 0; k < 3; ++k) {
          auto [a, b] = endpoints[k];
          if (a > b) std::swap(a, b);
          const int slot = a == t.nodes[0] ? (b == t.nodes[1] ? 0 : 1) : 2;
          t.edges[slot] = ids[k];
        }
        triangles.push_back(t);
      }
    }
    for (const Neighbor& nb : out[u]) mark[nb.node] = -1;
  }
  std::sort(triangles.begin(), triangles.end());
  return triangles;
}

Weight TriangleWeight(const WeightedGraph& graph, const Triangle& triangle) {
  const auto& v = triangle.nodes;
  const std::array<std::pair<NodeId, NodeId>, 3> pairs{
      {{v[0], v[1]}, {v[0], v[2]}, {v[1], v[2]}}};
  Weight total = 0;
  for (int slot = 0; slot < 3; ++slot) {
    const EdgeId e = triangle.edges[slot];
    const bool cached_ok =
        e >= 0 && e < graph.edge_count() &&
        graph.edge(e).u == std::min(pairs[slot].first, pairs[slot].second) &&
        graph.edge(e).v == std::max(pairs[slot].first, pairs[slot].second);
    if (cached_ok) {
      total += graph.weight(e);
      continue;
    }
    auto found = graph.FindEdge(pairs[slot].first, pairs[slot].second);
    if (!found) {
      throw StructuralError("triangle edge {" +
                            std::to_string(pairs[slot].first) + "," +
                            std::to_string(pairs[slot].second) +
                            "} is not in the graph");
    }
    total += graph.weight(*found);
  }
  return total;
}

std::int64_t ExactBelowThresholdCount(const WeightedGraph& graph,
                                      std::span<const Triangle> triangles,
                                      Weight lambda) {
  std::int64_t count = 0;
  for (const Triangle& t : triangles) {
    if (TriangleWeight(graph, t) < lambda) ++count;
  }
  return count;
}

std::int64_t ExactBelowThresholdCount(const WeightedGraph& graph,
                                      Weight lambda) {
  return ExactBelowThresholdCount(graph, EnumerateTriangles(graph), lambda);
}

}  // namespace lwdp

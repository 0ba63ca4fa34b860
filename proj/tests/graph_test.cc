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

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "lwdp/error.h"
#include "testing/oracles.h"

namespace lwdp {
namespace {

WeightedGraph Complete(NodeId n, Weight w) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v, w});
  return WeightedGraph(n, edges);
}

TEST(WeightedGraphTest, CanonicalizesEdgesAndBuildsSortedAdjacency) {
  const std::vector<Edge> edges{{2, 0, 7}, {1, 0, 3}, {2, 1, -1}};
  WeightedGraph g(3, edges);
  ASSERT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.edge(0), (Edge{0, 1, 3}));
  EXPECT_EQ(g.edge(1), (Edge{0, 2, 7}));
  EXPECT_EQ(g.edge(2), (Edge{1, 2, -1}));
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_EQ(g.max_degree(), 2);
  EXPECT_EQ(g.neighbors(2)[0].node, 0);
  EXPECT_EQ(g.neighbors(2)[1].node, 1);
  EXPECT_EQ(g.IncidentWeights(2), (std::vector<Weight>{7, -1}));
  EXPECT_EQ(g.FindEdge(2, 1), 2);
  EXPECT_FALSE(g.FindEdge(0, 0).has_value());
}

TEST(WeightedGraphTest, RejectsSelfLoopsDuplicatesAndBadIds) {
  const std::vector<Edge> loop{{1, 1, 0}};
  EXPECT_THROW(WeightedGraph(2, loop), ValidationError);
  const std::vector<Edge> dup{{0, 1, 0}, {1, 0, 5}};
  EXPECT_THROW(WeightedGraph(2, dup), ValidationError);
  const std::vector<Edge> range{{0, 2, 0}};
  EXPECT_THROW(WeightedGraph(2, range), ValidationError);
}

TEST(WeightedGraphTest, DegreeSumIsTwiceEdgeCount) {
  std::mt19937_64 rng(3);
  const WeightedGraph g = testing::RandomGraph(rng, 40, 0.3, 0, 5);
  std::int64_t total = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) total += g.degree(v);
  EXPECT_EQ(total, 2 * g.edge_count());
}

TEST(WeightedGraphTest, WithWeightsKeepsTopology) {
  const WeightedGraph g = Complete(4, 1);
  const std::vector<Weight> w{1, 2, 3, 4, 5, 6};
  const WeightedGraph h = g.WithWeights(w);
  EXPECT_EQ(h.weight(5), 6);
  EXPECT_EQ(h.edge_count(), g.edge_count());
  EXPECT_THROW(g.WithWeights(std::vector<Weight>{1}), ValidationError);
}

TEST(EnumerateTrianglesTest, CompleteGraphOnFourNodes) {
  const auto tris = EnumerateTriangles(Complete(4, 0));
  ASSERT_EQ(tris.size(), 4u);
  EXPECT_EQ(tris[0].nodes, (std::array<NodeId, 3>{0, 1, 2}));
  EXPECT_EQ(tris[3].nodes, (std::array<NodeId, 3>{1, 2, 3}));
}

TEST(EnumerateTrianglesTest, PathHasNone) {
  const std::vector<Edge> edges{{0, 1, 1}, {1, 2, 1}};
  EXPECT_TRUE(EnumerateTriangles(WeightedGraph(3, edges)).empty());
}

TEST(EnumerateTrianglesTest, CompleteGraphOn278NodesHas3542276Triangles) {
  EXPECT_EQ(EnumerateTriangles(Complete(278, 1)).size(), 3542276u);
}

TEST(EnumerateTrianglesTest, EdgesMatchCanonicalSlots) {
  std::mt19937_64 rng(11);
  const WeightedGraph g = testing::RandomGraph(rng, 25, 0.5, -3, 3);
  for (const Triangle& t : EnumerateTriangles(g)) {
    EXPECT_EQ(t.edges[0], *g.FindEdge(t.nodes[0], t.nodes[1]));
    EXPECT_EQ(t.edges[1], *g.FindEdge(t.nodes[0], t.nodes[2]));
    EXPECT_EQ(t.edges[2], *g.FindEdge(t.nodes[1], t.nodes[2]));
    EXPECT_LT(t.edges[0], t.edges[1]);
    EXPECT_LT(t.edges[1], t.edges[2]);
  }
}

TEST(EnumerateTrianglesTest, AgreesWithTripleLoopOnSmallGraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const NodeId n = 1 + static_cast<NodeId>(rng() % 30);
    const double prob = (rng() % 100) / 100.0;
    const WeightedGraph g = testing::RandomGraph(rng, n, prob, 0, 1);
    const auto fast = EnumerateTriangles(g);
    const auto slow = testing::TripleLoopTriangles(g);
    ASSERT_EQ(fast.size(), slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      EXPECT_EQ(fast[i].nodes, slow[i]);
    }
  }
}

TEST(TriangleWeightTest, SumsThreeEdges) {
  const std::vector<std::vector<Weight>> cases{{1, 2, 3}, {0, 0, 0}, {-5, 2, 1}};
  const std::vector<Weight> expected{6, 0, -2};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const std::vector<Edge> edges{{0, 1, cases[i][0]},
                                  {0, 2, cases[i][1]},
                                  {1, 2, cases[i][2]}};
    const WeightedGraph g(3, edges);
    EXPECT_EQ(TriangleWeight(g, MakeTriangle(g, 2, 0, 1)), expected[i]);
  }
}

TEST(TriangleWeightTest, MissingEdgeIsStructuralError) {
  const std::vector<Edge> edges{{0, 1, 1}, {1, 2, 1}};
  const WeightedGraph g(3, edges);
  EXPECT_THROW(MakeTriangle(g, 0, 1, 2), StructuralError);
  Triangle forged;
  forged.nodes = {0, 1, 2};
  forged.edges = {0, 0, 1};
  EXPECT_THROW(TriangleWeight(g, forged), StructuralError);
  EXPECT_THROW(MakeTriangle(g, 0, 0, 1), ValidationError);
}

TEST(ExactBelowThresholdCountTest, StrictInequality) {
  const WeightedGraph g = Complete(4, 1);
  EXPECT_EQ(ExactBelowThresholdCount(g, 4), 4);
  EXPECT_EQ(ExactBelowThresholdCount(g, 3), 0);
}

TEST(ExactBelowThresholdCountTest, MatchesTripleLoopRecount) {
  std::mt19937_64 rng(20);
  const WeightedGraph g = testing::RandomGraph(rng, 20, 0.4, -5, 5);
  EXPECT_EQ(ExactBelowThresholdCount(g, 0), testing::TripleLoopCount(g, 0));
}

TEST(ExactBelowThresholdCountTest, MonotoneWithSaturatingEnds) {
  std::mt19937_64 rng(21);
  const WeightedGraph g = testing::RandomGraph(rng, 25, 0.5, -5, 5);
  const auto tris = EnumerateTriangles(g);
  ASSERT_FALSE(tris.empty());
  Weight lo = TriangleWeight(g, tris[0]);
  Weight hi = lo;
  for (const Triangle& t : tris) {
    lo = std::min(lo, TriangleWeight(g, t));
    hi = std::max(hi, TriangleWeight(g, t));
  }
  std::int64_t prev = -1;
  for (Weight lambda = lo - 2; lambda <= hi + 3; ++lambda) {
    const std::int64_t c = ExactBelowThresholdCount(g, tris, lambda);
    EXPECT_GE(c, prev);
    prev = c;
  }
  EXPECT_EQ(ExactBelowThresholdCount(g, tris, lo), 0);
  EXPECT_EQ(ExactBelowThresholdCount(g, tris, hi + 2),
            static_cast<std::int64_t>(tris.size()));
}

}  // namespace
}  // namespace lwdp

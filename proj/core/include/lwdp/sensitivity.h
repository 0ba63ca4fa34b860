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

#ifndef LWDP_SENSITIVITY_H_
#define LWDP_SENSITIVITY_H_

#include <cstdint>
#include <vector>

#include "lwdp/assignment.h"
#include "lwdp/estimators.h"
#include "lwdp/graph.h"
#include "lwdp/local_view.h"
#include "lwdp/order_stat_tree.h"

namespace lwdp {

// The triangles of v that contain one incident edge i = {v, u}.
//
// A triangle {v, u, x} in this group has weight w_i + c, where the partner
// sum c = w_{vx} + noisy w_{ux} does not depend on w_i.
struct EdgeTerms {
  Weight weight = 0;
  std::vector<Weight> partner_sums;
};

// Input of a smooth-sensitivity computation for node v: one EdgeTerms per
// incident edge of v.
struct SmoothSensInstance {
  NodeId node = 0;
  Weight lambda = 0;
  double beta = 1.0;
  Estimator estimator;
  std::vector<EdgeTerms> edges;
};

SmoothSensInstance BuildSmoothSensInstance(const LocalView& view,
                                           Weight lambda, double beta,
                                           const Estimator& estimator);

// GS(g) times the largest number of v's triangles sharing one incident edge.
// O(|triangles of v|).
double GlobalSensitivity(const LocalView& view, const Estimator& estimator);
double GlobalSensitivity(const WeightedGraph& graph,
                         const Assignment& assignment, NodeId v,
                         const Estimator& estimator);

struct JointKth {
  std::int64_t distance = 0;
  // Number of the k closest items taken from the left tree.
  std::int64_t from_left = 0;
};

// k-th smallest value of the union of two trees, where a key y of the left
// tree represents the distance y + left_offset and likewise for the right.
// Each tree is read in ascending key order, so keys must be stored such that
// ascending key means ascending distance. Also returns a split l such that the
// l smallest left items and the k - l smallest right items are the k smallest
// overall. O(log^2 n). Throws SizeError unless 1 <= k <= total size.
JointKth JointKthDistance(const OrderStatTree& left, std::int64_t left_offset,
                          const OrderStatTree& right,
                          std::int64_t right_offset, std::int64_t k);
// Trees that store distances directly.
JointKth JointKthDistance(const OrderStatTree& left,
                          const OrderStatTree& right, std::int64_t k);

// Local sensitivity of f'_v at the instance's current weights.
double LocalSensitivity(const SmoothSensInstance& instance);

// beta-smooth sensitivity for the biased estimator, using a pair of
// order-statistic trees per incident edge. O(d^2 log^3 d).
double SmoothSensitivityBiased(const SmoothSensInstance& instance);

// beta-smooth sensitivity for the unbiased estimator, using a single- and a
// double-target index per incident edge. O(d^2 log^2 d).
double SmoothSensitivityUnbiased(const SmoothSensInstance& instance);

// Dispatches on instance.estimator.kind.
double SmoothSensitivity(const SmoothSensInstance& instance);

inline constexpr std::size_t kMaxBruteForceDegree = 12;

// Exhaustive reference: for every integer target within `radius` of the
// candidate hull, solves the best assignment of each triangle to a state by
// dynamic programming. Exact for radius >= 1. Throws SizeError when the
// instance has more than kMaxBruteForceDegree incident edges.
double SmoothSensitivityBruteForce(const SmoothSensInstance& instance,
                                   int radius = 3);

}  // namespace lwdp

#endif  // LWDP_SENSITIVITY_H_

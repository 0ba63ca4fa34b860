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

#ifndef LWDP_LOCAL_VIEW_H_
#define LWDP_LOCAL_VIEW_H_

#include <span>
#include <vector>

#include "lwdp/assignment.h"
#include "lwdp/estimators.h"
#include "lwdp/graph.h"

namespace lwdp {

// A triangle as seen by its responsible node v: two private incident edges,
// addressed by their position in neighbors(v), and the noisy weight of the
// opposite edge received from the server.
struct LocalTriangle {
  int slot_a = 0;
  int slot_b = 0;
  Weight noisy_weight = 0;
};

// Everything node v may read during the count release.
struct LocalView {
  NodeId node = 0;
  std::vector<Weight> incident_weights;
  std::vector<LocalTriangle> triangles;
};

// Builds v's view. `own_weights` is w^v ordered like topology.neighbors(v);
// `received[k]` is the noisy weight for assignment.triangles_of(v)[k]. Only
// the topology of `topology` is consulted, never its weights.
LocalView MakeLocalView(const WeightedGraph& topology,
                        const Assignment& assignment, NodeId v,
                        std::span<const Weight> own_weights,
                        std::span<const Weight> received);

// f'_v: the estimator summed over v's triangles.
double LocalCount(const LocalView& view, const Estimator& estimator,
                  Weight lambda);

}  // namespace lwdp

#endif  // LWDP_LOCAL_VIEW_H_

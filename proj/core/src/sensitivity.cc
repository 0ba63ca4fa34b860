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

#include "lwdp/sensitivity.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "lwdp/error.h"
#include "lwdp/target_index.h"

namespace lwdp {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double SafeLog(double v) { return v > 0.0 ? std::log(v) : kNegInf; }

double FromLog(double log_value) {
  return log_value == kNegInf ? 0.0 : std::exp(log_value);
}

// Targets at which an incident edge's group of triangles switches: raising
// w_i by one flips partner sums equal to lambda - 1 - w_i, lowering it flips
// those equal to lambda - w_i.
std::pair<Weight, Weight> Bases(Weight lambda, Weight w_i) {
  return {lambda - 1 - w_i, lambda - w_i};
}

Weight BaseCost(Weight t, std::pair<Weight, Weight> bases) {
  return std::min(std::abs(t - bases.first), std::abs(t - bases.second));
}

// ln((k - 1 + m) / (k + m)) < -beta * d: adding the (k + m)-th shifted item
// still pays off.
bool WorthShifting(std::int64_t k, std::int64_t m, double beta,
                   std::int64_t d) {
  const double ratio = static_cast<double>(k - 1 + m) / (k + m);
  return SafeLog(ratio) < -beta * static_cast<double>(d);
}

double BiasedEdge(const EdgeTerms& edge, Weight lambda, double beta) {
  std::vector<Weight> c = edge.partner_sums;
  if (c.empty()) return kNegInf;
  std::sort(c.begin(), c.end());
  const auto bases = Bases(lambda, edge.weight);

  std::vector<Weight> targets = c;
  targets.push_back(bases.first);
  targets.push_back(bases.second);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  // Left holds -c for c <= t and right holds c for c > t, so that ascending
  // keys on both sides mean ascending distance |c - t|.
  OrderStatTree left;
  OrderStatTree right;
  for (Weight v : c) right.Insert(v);
  const std::int64_t n = static_cast<std::int64_t>(c.size());
  std::size_t moved = 0;
  double best = kNegInf;

  for (Weight t : targets) {
    while (moved < c.size() && c[moved] <= t) {
      right.Erase(c[moved]);
      left.Insert(-c[moved]);
      ++moved;
    }
    auto kth = [&](std::int64_t k) {
      return JointKthDistance(left, t, right, -t, k);
    };
    // Largest k for which the k-th closest item is still worth moving.
    std::int64_t lo = 1;
    std::int64_t hi = n;
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo + 1) / 2;
      if (WorthShifting(mid, 0, beta, kth(mid).distance)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    const JointKth split = kth(lo);
    const std::int64_t l = split.from_left;
    const std::int64_t r = lo - l;
    const std::int64_t shift = (l * t + left.PrefixSum(l)) +
                               (right.PrefixSum(r) - r * t);
    const double value =
        std::log(static_cast<double>(lo)) -
        beta * static_cast<double>(shift + BaseCost(t, bases));
    best = std::max(best, value);
  }
  return best;
}

// Evaluates (a + b k) e^{-beta (k + base_cost)} at the integers around the
// stationary point 1/beta - a/b, clamped to [0, limit].
double BestPartialShift(double a, double b, double beta,
                        std::int64_t limit, Weight base_cost,
                        double* stationary) {
  const double k_star = 1.0 / beta - a / b;
  *stationary = k_star;
  double best = kNegInf;
  for (double k : {std::floor(k_star), std::ceil(k_star)}) {
    const double kc =
        std::clamp(k, 0.0, static_cast<double>(limit));
    best = std::max(best, SafeLog(a + b * kc) -
                              beta * (kc + static_cast<double>(base_cost)));
  }
  return best;
}

// Largest k in [0, available] with WorthShifting(k, m, beta, d(k)).
template <typename DistanceFn>
std::int64_t ShiftCount(std::int64_t available, std::int64_t m, double beta,
                        DistanceFn d) {
  std::int64_t lo = 0;
  std::int64_t hi = available;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (WorthShifting(mid, m, beta, d(mid))) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

double UnbiasedEdge(const EdgeTerms& edge, Weight lambda, double beta,
                    double x) {
  const std::vector<Weight>& c = edge.partner_sums;
  if (c.empty()) return kNegInf;
  const auto bases = Bases(lambda, edge.weight);

  std::vector<Weight> targets;
  targets.reserve(3 * c.size() + 2);
  for (Weight v : c) {
    targets.push_back(v - 1);
    targets.push_back(v);
    targets.push_back(v + 1);
  }
  targets.push_back(bases.first);
  targets.push_back(bases.second);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  DoubleTargetIndex pair_index(c, targets.front());
  SingleTargetIndex single_index(c, targets.front());
  const std::int64_t n = pair_index.size();
  const double b = 1.0 + 3.0 * x;
  double best = kNegInf;

  for (Weight t : targets) {
    pair_index.UpdateTarget(t);
    single_index.UpdateTarget(t);
    const Weight base_cost = BaseCost(t, bases);
    const std::int64_t count_m = pair_index.zero_count();
    const std::int64_t count_n = pair_index.on_target_count();
    const std::int64_t count_o = n - count_m - count_n;
    const std::int64_t m = count_m + count_n;
    double k_star = 0.0;

    // Positive difference: items next to t contribute x, items on t
    // contribute -(1 + 2x). Move items off t first, then pull outer items
    // next to t.
    {
      const double a = count_m * x - (1.0 + 2.0 * x) * count_n;
      best = std::max(best,
                      BestPartialShift(a, b, beta, count_n, base_cost, &k_star));
      if (k_star >= static_cast<double>(count_n)) {
        const std::int64_t k = ShiftCount(count_o, m, beta, [&](auto j) {
          return pair_index.KthDistance(m + j);
        });
        if (k + m > 0) {
          const Weight shift = pair_index.SumKDistances(m + k);
          best = std::max(best, std::log(x * static_cast<double>(k + m)) -
                                    beta * static_cast<double>(shift +
                                                               base_cost));
        }
      }
    }
    // Negative difference: the roles swap, items next to t are moved onto it
    // and outer items are pulled onto t.
    {
      const double a = (1.0 + 2.0 * x) * count_n - count_m * x;
      best = std::max(best,
                      BestPartialShift(a, b, beta, count_m, base_cost, &k_star));
      if (k_star >= static_cast<double>(count_m)) {
        const std::int64_t k = ShiftCount(count_o, m, beta, [&](auto j) {
          return single_index.KthDistance(m + j);
        });
        if (k + m > 0) {
          const Weight shift = single_index.SumKDistances(m + k);
          best = std::max(best,
                          std::log((1.0 + 2.0 * x) * static_cast<double>(k + m)) -
                              beta * static_cast<double>(shift + base_cost));
        }
      }
    }
  }
  return best;
}

void CheckBeta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("beta must be positive and finite");
  }
}

}  // namespace

SmoothSensInstance BuildSmoothSensInstance(const LocalView& view,
                                           Weight lambda, double beta,
                                           const Estimator& estimator) {
  SmoothSensInstance inst;
  inst.node = view.node;
  inst.lambda = lambda;
  inst.beta = beta;
  inst.estimator = estimator;
  inst.edges.resize(view.incident_weights.size());
  for (std::size_t i = 0; i < view.incident_weights.size(); ++i) {
    inst.edges[i].weight = view.incident_weights[i];
  }
  for (const LocalTriangle& t : view.triangles) {
    const Weight wa = view.incident_weights[t.slot_a];
    const Weight wb = view.incident_weights[t.slot_b];
    inst.edges[t.slot_a].partner_sums.push_back(wb + t.noisy_weight);
    inst.edges[t.slot_b].partner_sums.push_back(wa + t.noisy_weight);
  }
  return inst;
}

double GlobalSensitivity(const LocalView& view, const Estimator& estimator) {
  std::vector<std::int64_t> count(view.incident_weights.size(), 0);
  std::int64_t most = 0;
  for (const LocalTriangle& t : view.triangles) {
    most = std::max({most, ++count[t.slot_a], ++count[t.slot_b]});
  }
  return estimator.GlobalSensitivity() * static_cast<double>(most);
}

double GlobalSensitivity(const WeightedGraph& graph,
                         const Assignment& assignment, NodeId v,
                         const Estimator& estimator) {
  std::map<NodeId, std::int64_t> count;
  std::int64_t most = 0;
  for (std::int32_t idx : assignment.triangles_of(v)) {
    for (NodeId u : assignment.triangle(idx).nodes) {
      if (u == v) continue;
      if (!graph.FindEdge(v, u)) {
        throw StructuralError("assigned triangle is not incident to node");
      }
      most = std::max(most, ++count[u]);
    }
  }
  return estimator.GlobalSensitivity() * static_cast<double>(most);
}

JointKth JointKthDistance(const OrderStatTree& left, std::int64_t left_offset,
                          const OrderStatTree& right,
                          std::int64_t right_offset, std::int64_t k) {
  const std::int64_t n_left = left.size();
  const std::int64_t n_right = right.size();
  if (k < 1 || k > n_left + n_right) {
    throw SizeError("joint rank " + std::to_string(k) + " outside [1, " +
                    std::to_string(n_left + n_right) + "]");
  }
  auto d_left = [&](std::int64_t i) { return left.Select(i) + left_offset; };
  auto d_right = [&](std::int64_t i) {
    return right.Select(i) + right_offset;
  };
  // Smallest l whose next left item is no closer than the last right item
  // taken; every smaller l leaves a closer left item behind.
  std::int64_t lo = std::max<std::int64_t>(0, k - n_right);
  std::int64_t hi = std::min(k, n_left);
  while (lo < hi) {
    const std::int64_t l = lo + (hi - lo) / 2;
    if (d_left(l + 1) >= d_right(k - l)) {
      hi = l;
    } else {
      lo = l + 1;
    }
  }
  JointKth out;
  out.from_left = lo;
  // An empty side contributes nothing; select(0) = 0 is not a distance here.
  if (lo > 0) out.distance = d_left(lo);
  if (k - lo > 0) out.distance = std::max(out.distance, d_right(k - lo));
  return out;
}

JointKth JointKthDistance(const OrderStatTree& left,
                          const OrderStatTree& right, std::int64_t k) {
  return JointKthDistance(left, 0, right, 0, k);
}

double LocalSensitivity(const SmoothSensInstance& instance) {
  const double x = instance.estimator.x();
  double best = 0.0;
  for (const EdgeTerms& edge : instance.edges) {
    const auto bases = Bases(instance.lambda, edge.weight);
    for (Weight t : {bases.first, bases.second}) {
      std::int64_t on = 0;
      std::int64_t next = 0;
      for (Weight c : edge.partner_sums) {
        if (c == t) ++on;
        if (std::abs(c - t) == 1) ++next;
      }
      const double value =
          instance.estimator.kind == EstimatorKind::kBiased
              ? static_cast<double>(on)
              : std::abs(next * x - on * (1.0 + 2.0 * x));
      best = std::max(best, value);
    }
  }
  return best;
}

double SmoothSensitivityBiased(const SmoothSensInstance& instance) {
  CheckBeta(instance.beta);
  double best = kNegInf;
  for (const EdgeTerms& edge : instance.edges) {
    best = std::max(best, BiasedEdge(edge, instance.lambda, instance.beta));
  }
  return FromLog(best);
}

double SmoothSensitivityUnbiased(const SmoothSensInstance& instance) {
  CheckBeta(instance.beta);
  const double x = instance.estimator.x();
  double best = kNegInf;
  for (const EdgeTerms& edge : instance.edges) {
    best = std::max(best,
                    UnbiasedEdge(edge, instance.lambda, instance.beta, x));
  }
  return FromLog(best);
}

double SmoothSensitivity(const SmoothSensInstance& instance) {
  return instance.estimator.kind == EstimatorKind::kBiased
             ? SmoothSensitivityBiased(instance)
             : SmoothSensitivityUnbiased(instance);
}

}  // namespace lwdp

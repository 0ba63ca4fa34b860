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

// Exhaustive smooth sensitivity, kept apart from the fast path on purpose:
// it shares no code with sensitivity.cc beyond the public types.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "lwdp/error.h"
#include "lwdp/sensitivity.h"

namespace lwdp {
namespace {

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();

// Minimum total shift cost to make exactly `k` partner sums flip when the
// switching point sits at t. A sum flips iff it equals t after shifting.
// best[k] for k = 0..n.
std::vector<std::int64_t> BiasedCosts(const std::vector<Weight>& c, Weight t) {
  std::vector<std::int64_t> dp(c.size() + 1, kUnreachable);
  dp[0] = 0;
  for (Weight v : c) {
    std::vector<std::int64_t> next(c.size() + 1, kUnreachable);
    const std::int64_t hit = std::abs(v - t);
    const std::int64_t miss = v == t ? 1 : 0;
    for (std::size_t k = 0; k <= c.size(); ++k) {
      if (dp[k] == kUnreachable) continue;
      next[k] = std::min(next[k], dp[k] + miss);
      if (k + 1 <= c.size()) next[k + 1] = std::min(next[k + 1], dp[k] + hit);
    }
    dp.swap(next);
  }
  return dp;
}

// Unbiased states of one partner sum relative to t: one step away (adds x),
// on t (adds -(1 + 2x)), or at least two away (adds 0). Returns the minimum
// cost table indexed by [#one-away][#on].
std::vector<std::vector<std::int64_t>> UnbiasedCosts(
    const std::vector<Weight>& c, Weight t) {
  const std::size_t n = c.size();
  std::vector<std::vector<std::int64_t>> dp(
      n + 1, std::vector<std::int64_t>(n + 1, kUnreachable));
  dp[0][0] = 0;
  for (Weight v : c) {
    auto next = std::vector<std::vector<std::int64_t>>(
        n + 1, std::vector<std::int64_t>(n + 1, kUnreachable));
    const std::int64_t d = std::abs(v - t);
    const std::int64_t to_next = std::min(std::abs(v - (t - 1)),
                                          std::abs(v - (t + 1)));
    const std::int64_t to_on = d;
    const std::int64_t to_far = std::max<std::int64_t>(0, 2 - d);
    for (std::size_t a = 0; a <= n; ++a) {
      for (std::size_t b = 0; a + b <= n; ++b) {
        const std::int64_t cur = dp[a][b];
        if (cur == kUnreachable) continue;
        if (a + 1 <= n) next[a + 1][b] = std::min(next[a + 1][b], cur + to_next);
        if (b + 1 <= n) next[a][b + 1] = std::min(next[a][b + 1], cur + to_on);
        next[a][b] = std::min(next[a][b], cur + to_far);
      }
    }
    dp.swap(next);
  }
  return dp;
}

}  // namespace

double SmoothSensitivityBruteForce(const SmoothSensInstance& instance,
                                   int radius) {
  if (instance.edges.size() > kMaxBruteForceDegree) {
    throw SizeError("brute-force smooth sensitivity supports degree <= " +
                    std::to_string(kMaxBruteForceDegree) + ", got " +
                    std::to_string(instance.edges.size()));
  }
  if (radius < 0) throw DomainError("radius must be nonnegative");
  if (!(instance.beta > 0.0)) throw DomainError("beta must be positive");

  const double beta = instance.beta;
  const double x = instance.estimator.x();
  const bool biased = instance.estimator.kind == EstimatorKind::kBiased;
  double best_log = -std::numeric_limits<double>::infinity();

  for (const EdgeTerms& edge : instance.edges) {
    const std::vector<Weight>& c = edge.partner_sums;
    if (c.empty()) continue;
    // Raising w_i flips sums at lambda - 1 - w_i; lowering flips lambda - w_i.
    for (Weight base : {instance.lambda - 1 - edge.weight,
                        instance.lambda - edge.weight}) {
      Weight lo = base;
      Weight hi = base;
      for (Weight v : c) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      for (Weight t = lo - radius; t <= hi + radius; ++t) {
        // Moving the switching point from base to t means shifting w_i.
        const std::int64_t move = std::abs(t - base);
        if (biased) {
          const auto cost = BiasedCosts(c, t);
          for (std::size_t k = 1; k < cost.size(); ++k) {
            if (cost[k] == kUnreachable) continue;
            best_log = std::max(
                best_log, std::log(static_cast<double>(k)) -
                              beta * static_cast<double>(cost[k] + move));
          }
        } else {
          const auto cost = UnbiasedCosts(c, t);
          for (std::size_t a = 0; a < cost.size(); ++a) {
            for (std::size_t b = 0; a + b < cost.size(); ++b) {
              if (cost[a][b] == kUnreachable) continue;
              const double gain = std::abs(static_cast<double>(a) * x -
                                           static_cast<double>(b) *
                                               (1.0 + 2.0 * x));
              if (gain <= 0.0) continue;
              best_log = std::max(
                  best_log, std::log(gain) -
                                beta * static_cast<double>(cost[a][b] + move));
            }
          }
        }
      }
    }
  }
  return std::isinf(best_log) ? 0.0 : std::exp(best_log);
}

}  // namespace lwdp

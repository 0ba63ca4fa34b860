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

#ifndef LWDP_ESTIMATORS_H_
#define LWDP_ESTIMATORS_H_

#include <string_view>

#include "lwdp/graph.h"

namespace lwdp {

enum class EstimatorKind { kBiased, kUnbiased };

std::string_view EstimatorKindName(EstimatorKind kind);
// Accepts "biased" or "unbiased"; throws ConfigError otherwise.
EstimatorKind ParseEstimatorKind(std::string_view name);

// A per-triangle estimator g applied to a partially noisy triangle weight m.
// `p` is the discrete Laplace parameter of the noise on the unseen edge.
struct Estimator {
  EstimatorKind kind = EstimatorKind::kBiased;
  double p = 0.5;

  // Throws DomainError unless 0 < p < 1.
  static Estimator Create(EstimatorKind kind, double p);

  // p / (1 - p)^2, the correction weight of the unbiased estimator.
  double x() const;
  // g(m) for threshold lambda.
  double Evaluate(Weight m, Weight lambda) const;
  // Largest change of g when m moves by one: 1 (biased) or 1 + 2x.
  double GlobalSensitivity() const;
};

// 1{w_vu + w_vx + noisy_w_ux < lambda}.
int BiasedIndicator(Weight w_vu, Weight w_vx, Weight noisy_w_ux,
                    Weight lambda);

// 0 if m > lambda, -x if m == lambda, 1 + x if m == lambda - 1, 1 otherwise.
double HValue(Weight m, Weight lambda, double p);

// E[1{w_t + Z < lambda}] for Z ~ DLap(p).
double ExpectedBiased(Weight w_t, Weight lambda, double p);

struct Moments {
  double variance = 0.0;
  double covariance = 0.0;
  // True when `covariance` is an upper bound rather than the exact value.
  bool covariance_is_bound = false;
};

// Closed-form second moments of one triangle's estimate (weight w_t) and of
// a pair of triangles (weights w_t, w_t2) whose estimates read the same noisy
// edge.
//
// Biased: exact variance E(1 - E) and exact covariance
//   Pr[Z < lambda - max(w_t, w_t2)] - E_t E_t2.
// Unbiased: the closed-form variance expression
//   4 p^(|w_t - lambda| + 1) (p / (1 - p)^3 + 1 - p)
// and the covariance bound 4 p (p / (1 - p)^3 + 1 - p). See
// ExactUnbiasedVariance for the true variance.
Moments ClosedFormMoments(EstimatorKind kind, Weight w_t, Weight w_t2,
                          Weight lambda, double p);

// Exact Var[h(w_t + Z)]:
//   p^(delta + 1) (1 / (1 - p) + p / (1 - p)^3),
// with delta = w_t - lambda if w_t >= lambda and lambda - 1 - w_t otherwise.
double ExactUnbiasedVariance(Weight w_t, Weight lambda, double p);

// p^k computed as exp(k log p), flushed to 0 below 1e-300.
double PowP(double p, double k);

}  // namespace lwdp

#endif  // LWDP_ESTIMATORS_H_

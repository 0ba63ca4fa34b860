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

#include "lwdp/estimators.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "lwdp/error.h"
#include "lwdp/mechanisms.h"

namespace lwdp {
namespace {

void CheckP(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("p must lie in (0,1), got " + std::to_string(p));
  }
}

double XOf(double p) { return p / ((1.0 - p) * (1.0 - p)); }

}  // namespace

std::string_view EstimatorKindName(EstimatorKind kind) {
  return kind == EstimatorKind::kBiased ? "biased" : "unbiased";
}

EstimatorKind ParseEstimatorKind(std::string_view name) {
  if (name == "biased") return EstimatorKind::kBiased;
  if (name == "unbiased") return EstimatorKind::kUnbiased;
  throw ConfigError("unknown estimator '" + std::string(name) + "'");
}

Estimator Estimator::Create(EstimatorKind kind, double p) {
  CheckP(p);
  return Estimator{kind, p};
}

double Estimator::x() const { return XOf(p); }

double Estimator::Evaluate(Weight m, Weight lambda) const {
  if (kind == EstimatorKind::kBiased) return m < lambda ? 1.0 : 0.0;
  return HValue(m, lambda, p);
}

double Estimator::GlobalSensitivity() const {
  return kind == EstimatorKind::kBiased ? 1.0 : 1.0 + 2.0 * x();
}

int BiasedIndicator(Weight w_vu, Weight w_vx, Weight noisy_w_ux,
                    Weight lambda) {
  return w_vu + w_vx + noisy_w_ux < lambda ? 1 : 0;
}

double HValue(Weight m, Weight lambda, double p) {
  CheckP(p);
  if (m > lambda) return 0.0;
  if (m == lambda) return -XOf(p);
  if (m == lambda - 1) return 1.0 + XOf(p);
  return 1.0;
}

double PowP(double p, double k) {
  const double v = std::exp(k * std::log(p));
  return v < 1e-300 ? 0.0 : v;
}

double ExpectedBiased(Weight w_t, Weight lambda, double p) {
  CheckP(p);
  if (w_t < lambda) {
    return 1.0 - PowP(p, static_cast<double>(lambda - w_t)) / (1.0 + p);
  }
  return PowP(p, static_cast<double>(w_t - lambda + 1)) / (1.0 + p);
}

Moments ClosedFormMoments(EstimatorKind kind, Weight w_t, Weight w_t2,
                          Weight lambda, double p) {
  CheckP(p);
  Moments out;
  if (kind == EstimatorKind::kBiased) {
    const double e1 = ExpectedBiased(w_t, lambda, p);
    const double e2 = ExpectedBiased(w_t2, lambda, p);
    out.variance = e1 * (1.0 - e1);
    // Both indicators fire iff the shared noise clears the heavier triangle.
    out.covariance = DlapCdf(lambda - std::max(w_t, w_t2), p) - e1 * e2;
    out.covariance_is_bound = false;
    return out;
  }
  const double tail = p / std::pow(1.0 - p, 3) + 1.0 - p;
  const double gap = static_cast<double>(std::llabs(w_t - lambda));
  out.variance = 4.0 * PowP(p, gap + 1.0) * tail;
  out.covariance = 4.0 * p * tail;
  out.covariance_is_bound = true;
  return out;
}

double ExactUnbiasedVariance(Weight w_t, Weight lambda, double p) {
  CheckP(p);
  const Weight delta = w_t >= lambda ? w_t - lambda : lambda - 1 - w_t;
  return PowP(p, static_cast<double>(delta) + 1.0) *
         (1.0 / (1.0 - p) + p / std::pow(1.0 - p, 3));
}

}  // namespace lwdp

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

#include <cmath>
#include <cstdint>

#include "gtest/gtest.h"
#include "lwdp/error.h"
#include "lwdp/mechanisms.h"
#include "testing/oracles.h"

namespace lwdp {
namespace {

constexpr double kProbs[] = {0.1, 0.36787944117144233, 0.6065306597126334,
                             0.85};

TEST(EstimatorTest, BiasedIndicatorExamples) {
  EXPECT_EQ(BiasedIndicator(1, 2, 0, 4), 1);
  EXPECT_EQ(BiasedIndicator(1, 2, 1, 4), 0);
  EXPECT_EQ(BiasedIndicator(-3, -3, -3, 0), 1);
}

TEST(EstimatorTest, HValueCases) {
  const double p = 0.5;
  const double x = p / ((1 - p) * (1 - p));
  EXPECT_DOUBLE_EQ(x, 2.0);
  EXPECT_DOUBLE_EQ(HValue(17, 10, p), 0.0);
  EXPECT_DOUBLE_EQ(HValue(11, 10, p), 0.0);
  EXPECT_DOUBLE_EQ(HValue(10, 10, p), -2.0);
  EXPECT_DOUBLE_EQ(HValue(9, 10, p), 3.0);
  EXPECT_DOUBLE_EQ(HValue(8, 10, p), 1.0);
  EXPECT_DOUBLE_EQ(HValue(-100, 10, p), 1.0);
}

TEST(EstimatorTest, EvaluateMatchesReference) {
  for (double p : kProbs) {
    for (EstimatorKind kind : {EstimatorKind::kBiased, EstimatorKind::kUnbiased}) {
      const Estimator est = Estimator::Create(kind, p);
      for (Weight m = -6; m <= 6; ++m) {
        EXPECT_DOUBLE_EQ(est.Evaluate(m, 2), testing::ReferenceG(kind, m, 2, p));
      }
    }
  }
}

TEST(EstimatorTest, GlobalSensitivityIsLargestUnitStep) {
  for (double p : kProbs) {
    for (EstimatorKind kind : {EstimatorKind::kBiased, EstimatorKind::kUnbiased}) {
      const Estimator est = Estimator::Create(kind, p);
      double largest = 0.0;
      for (Weight m = -5; m <= 5; ++m) {
        largest = std::max(largest, std::abs(est.Evaluate(m + 1, 0) -
                                             est.Evaluate(m, 0)));
      }
      EXPECT_NEAR(est.GlobalSensitivity(), largest, 1e-12);
    }
  }
  EXPECT_DOUBLE_EQ(Estimator::Create(EstimatorKind::kUnbiased, 0.5)
                       .GlobalSensitivity(),
                   5.0);
}

TEST(EstimatorTest, CreateRejectsBadProbability) {
  EXPECT_THROW(Estimator::Create(EstimatorKind::kBiased, 1.0), DomainError);
  EXPECT_THROW(HValue(0, 0, 0.0), DomainError);
}

TEST(EstimatorTest, KindNamesRoundTrip) {
  for (EstimatorKind kind : {EstimatorKind::kBiased, EstimatorKind::kUnbiased}) {
    EXPECT_EQ(ParseEstimatorKind(EstimatorKindName(kind)), kind);
  }
  EXPECT_THROW(ParseEstimatorKind("fair"), ConfigError);
}

TEST(EstimatorTest, UnbiasedExpectationEqualsIndicator) {
  for (double p : kProbs) {
    for (Weight gap = -20; gap <= 20; ++gap) {
      const auto [mean, var] =
          testing::TruncatedMoments(EstimatorKind::kUnbiased, gap, 0, p);
      EXPECT_NEAR(mean, gap < 0 ? 1.0 : 0.0, 1e-9) << p << " " << gap;
    }
  }
}

TEST(EstimatorTest, BiasedExpectationMatchesTruncatedSum) {
  for (double p : kProbs) {
    for (Weight gap = -20; gap <= 20; ++gap) {
      const auto [mean, var] =
          testing::TruncatedMoments(EstimatorKind::kBiased, gap, 0, p);
      EXPECT_NEAR(ExpectedBiased(gap, 0, p), mean, 1e-12);
    }
  }
}

TEST(EstimatorTest, ExpectedBiasedBoundaryValues) {
  EXPECT_NEAR(ExpectedBiased(4, 5, 0.5), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(ExpectedBiased(5, 5, 0.5), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(ExpectedBiased(-100000, 5, 0.5), 1.0, 1e-15);
}

TEST(EstimatorTest, BiasedBiasDecaysAwayFromThreshold) {
  const double p = 0.5;
  // Below the threshold the estimate undercounts, above it overcounts.
  EXPECT_LT(ExpectedBiased(-1, 0, p), 1.0);
  EXPECT_GT(ExpectedBiased(0, 0, p), 0.0);
  for (Weight gap = 1; gap < 15; ++gap) {
    EXPECT_LT(1.0 - ExpectedBiased(-gap - 1, 0, p), 1.0 - ExpectedBiased(-gap, 0, p));
    EXPECT_LT(ExpectedBiased(gap + 1, 0, p), ExpectedBiased(gap, 0, p));
  }
  EXPECT_NEAR(ExpectedBiased(0, 0, p), p / (1 + p), 1e-15);
}

TEST(MomentsTest, BiasedVarianceAndCovarianceAreExact) {
  for (double p : kProbs) {
    for (Weight a = -6; a <= 6; ++a) {
      const auto [mean_a, var_a] =
          testing::TruncatedMoments(EstimatorKind::kBiased, a, 0, p);
      for (Weight b = -6; b <= 6; ++b) {
        const auto [mean_b, var_b] =
            testing::TruncatedMoments(EstimatorKind::kBiased, b, 0, p);
        // E[1{a + Z < 0} 1{b + Z < 0}] by summing over the shared Z.
        double joint = 0.0;
        for (std::int64_t z = -400; z <= 400; ++z) {
          if (a + z < 0 && b + z < 0) joint += testing::ReferencePmf(z, p);
        }
        const Moments m = ClosedFormMoments(EstimatorKind::kBiased, a, b, 0, p);
        EXPECT_FALSE(m.covariance_is_bound);
        EXPECT_NEAR(m.variance, var_a, 1e-12);
        EXPECT_NEAR(m.covariance, joint - mean_a * mean_b, 1e-12);
      }
    }
  }
}

TEST(MomentsTest, BiasedBoundaryValues) {
  const double p = 0.4;
  const double q = p / (1 + p);
  const Moments m = ClosedFormMoments(EstimatorKind::kBiased, -1, -1, 0, p);
  EXPECT_NEAR(m.variance, q * (1 - q), 1e-15);
  EXPECT_LE(m.covariance, 2 * p / (1 + p));
  // Covariance is largest for a pair just below the threshold.
  for (Weight a = -5; a <= 5; ++a)
    for (Weight b = -5; b <= 5; ++b)
      EXPECT_LE(ClosedFormMoments(EstimatorKind::kBiased, a, b, 0, p).covariance,
                m.covariance + 1e-15);
}

TEST(MomentsTest, ExactUnbiasedVarianceMatchesTruncatedSum) {
  for (double p : kProbs) {
    for (Weight gap = -15; gap <= 15; ++gap) {
      const auto [mean, var] =
          testing::TruncatedMoments(EstimatorKind::kUnbiased, gap, 0, p);
      EXPECT_NEAR(ExactUnbiasedVariance(gap, 0, p), var, 1e-9 * (1 + var))
          << p << " " << gap;
    }
  }
}

TEST(MomentsTest, UnbiasedClosedFormValues) {
  const double p = 0.5;
  const double tail = p / std::pow(1 - p, 3) + 1 - p;
  const Moments at = ClosedFormMoments(EstimatorKind::kUnbiased, 3, 3, 3, p);
  EXPECT_TRUE(at.covariance_is_bound);
  EXPECT_NEAR(at.variance, 4 * p * tail, 1e-12);
  EXPECT_NEAR(at.covariance, 4 * p * tail, 1e-12);
  const Moments off = ClosedFormMoments(EstimatorKind::kUnbiased, 0, 0, 3, p);
  EXPECT_NEAR(off.variance, 4 * std::pow(p, 4) * tail, 1e-12);
}

TEST(MomentsTest, UnbiasedCovarianceBoundHolds) {
  for (double p : kProbs) {
    const double bound =
        ClosedFormMoments(EstimatorKind::kUnbiased, 0, 0, 0, p).covariance;
    for (Weight a = -5; a <= 5; ++a) {
      for (Weight b = -5; b <= 5; ++b) {
        const double ma = testing::TruncatedMoments(EstimatorKind::kUnbiased, a, 0, p).first;
        const double mb = testing::TruncatedMoments(EstimatorKind::kUnbiased, b, 0, p).first;
        double joint = 0.0;
        for (std::int64_t z = -600; z <= 600; ++z) {
          joint += testing::ReferencePmf(z, p) *
                   testing::ReferenceG(EstimatorKind::kUnbiased, a + z, 0, p) *
                   testing::ReferenceG(EstimatorKind::kUnbiased, b + z, 0, p);
        }
        EXPECT_LE(std::abs(joint - ma * mb), bound * (1 + 1e-12));
      }
    }
  }
}

TEST(MomentsTest, MonteCarloVarianceMatchesExact) {
  const double p = std::exp(-1.0);
  NoiseStream s = RandomSource(17).Stream(0, Round::kWeightRelease);
  constexpr int kDraws = 100000;
  for (Weight w : {-1, 0, 2}) {
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < kDraws; ++i) {
      const double h = HValue(w + DlapSample(p, s), 0, p);
      sum += h;
      sq += h * h;
    }
    const double mean = sum / kDraws;
    const double var = sq / kDraws - mean * mean;
    const double exact = ExactUnbiasedVariance(w, 0, p);
    EXPECT_NEAR(var, exact, 0.05 * exact + 1e-3) << w;
  }
}

TEST(PowPTest, FlushesTinyValues) {
  EXPECT_DOUBLE_EQ(PowP(0.5, 3), 0.125);
  EXPECT_EQ(PowP(0.5, 5000), 0.0);
}

}  // namespace
}  // namespace lwdp

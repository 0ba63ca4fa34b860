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

#include "lwdp/mechanisms.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "lwdp/debug.h"
#include "lwdp/error.h"

namespace lwdp {
namespace {

void CheckP(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("discrete Laplace parameter must lie in (0,1), got " +
                      std::to_string(p));
  }
}

bool PositiveFinite(double v) { return std::isfinite(v) && v > 0.0; }

// Antiderivative of 1 / (1 + z^4), odd and zero at the origin.
double QuarticAntiderivative(double z) {
  constexpr double kSqrt2 = std::numbers::sqrt2;
  const double log_term =
      std::log((z * z + kSqrt2 * z + 1.0) / (z * z - kSqrt2 * z + 1.0)) /
      (4.0 * kSqrt2);
  const double atan_term =
      (std::atan(kSqrt2 * z + 1.0) + std::atan(kSqrt2 * z - 1.0)) /
      (2.0 * kSqrt2);
  return log_term + atan_term;
}

constexpr double kSmoothNorm = std::numbers::sqrt2 / std::numbers::pi;

}  // namespace

PrivacyBudget PrivacyBudget::Create(double epsilon_total, double epsilon_1,
                                    double epsilon_2) {
  if (!PositiveFinite(epsilon_total) || !PositiveFinite(epsilon_1) ||
      !PositiveFinite(epsilon_2)) {
    throw ConfigError("privacy parameters must be finite and positive");
  }
  // Relative slack absorbs rounding in callers that compute the split.
  if (epsilon_1 + epsilon_2 > epsilon_total * (1.0 + 1e-12)) {
    throw ConfigError("epsilon_1 + epsilon_2 exceeds the total budget");
  }
  return PrivacyBudget(epsilon_total, epsilon_1, epsilon_2);
}

PrivacyBudget PrivacyBudget::EvenSplit(double epsilon_total) {
  return Create(epsilon_total, epsilon_total / 2.0, epsilon_total / 2.0);
}

double PrivacyBudget::p() const { return std::exp(-epsilon_1_); }

std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

NoiseStream RandomSource::Stream(NodeId node, Round round) const {
  const std::uint64_t key =
      (static_cast<std::uint64_t>(static_cast<std::uint32_t>(node)) << 32) |
      static_cast<std::uint32_t>(round);
  return NoiseStream(Mix64(Mix64(seed_) ^ key), noise_disabled_);
}

NoiseStream RandomSource::Stream(std::uint64_t label) const {
  return NoiseStream(Mix64(Mix64(seed_ ^ 0x5bd1e995ULL) ^ Mix64(label)),
                     noise_disabled_);
}

RandomSource RandomSource::Fork(std::uint64_t index) const {
  RandomSource out(Mix64(seed_ + Mix64(index + 1)));
  out.noise_disabled_ = noise_disabled_;
  return out;
}

namespace debug {

RandomSource NoiseDisabledSource(std::uint64_t seed) {
  RandomSource source(seed);
  source.noise_disabled_ = true;
  return source;
}

}  // namespace debug

double DlapPmf(std::int64_t i, double p) {
  CheckP(p);
  const double magnitude = std::abs(static_cast<double>(i));
  return std::exp(std::log1p(-p) - std::log1p(p) + magnitude * std::log(p));
}

double DlapCdf(std::int64_t k, double p) {
  CheckP(p);
  const double kd = static_cast<double>(k);
  if (k >= 1) return -std::expm1(kd * std::log(p) - std::log1p(p));
  return std::exp((1.0 - kd) * std::log(p) - std::log1p(p));
}

std::int64_t DlapSample(double p, NoiseStream& stream) {
  CheckP(p);
  if (stream.noise_disabled()) return 0;
  std::geometric_distribution<std::int64_t> geometric(1.0 - p);
  const std::int64_t a = geometric(stream.engine());
  const std::int64_t b = geometric(stream.engine());
  return a - b;
}

double LaplaceSample(double scale, NoiseStream& stream) {
  if (!PositiveFinite(scale)) {
    throw DomainError("Laplace scale must be positive, got " +
                      std::to_string(scale));
  }
  if (stream.noise_disabled()) return 0.0;
  std::exponential_distribution<double> exponential(1.0);
  const double a = exponential(stream.engine());
  const double b = exponential(stream.engine());
  return scale * (a - b);
}

SmoothNoiseConfig SmoothNoiseConfig::Create(double epsilon_2, double gamma) {
  if (gamma != kDefaultGamma) {
    throw UnsupportedParameterError(
        "smooth noise is implemented for gamma = 4 only, got " +
        std::to_string(gamma));
  }
  if (!PositiveFinite(epsilon_2)) {
    throw DomainError("epsilon_2 must be positive");
  }
  return SmoothNoiseConfig(gamma, epsilon_2);
}

double SmoothNoiseConfig::beta() const {
  return epsilon_2_ / (2.0 * (gamma_ - 1.0));
}

double SmoothNoiseConfig::scale_multiplier() const {
  return 2.0 * std::pow(gamma_ - 1.0, (gamma_ - 1.0) / gamma_) / epsilon_2_;
}

double SmoothNoiseDensity(double z) {
  const double z2 = z * z;
  return kSmoothNorm / (1.0 + z2 * z2);
}

double SmoothNoiseCdf(double z) {
  return 0.5 + kSmoothNorm * QuarticAntiderivative(z);
}

double SmoothNoiseSample(const SmoothNoiseConfig& config,
                         NoiseStream& stream) {
  (void)config;
  if (stream.noise_disabled()) return 0.0;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double u = uniform(stream.engine());
  const bool negative = (stream.engine()() & 1) != 0;
  if (u == 0.0) return 0.0;

  // Pr[|Z| <= a] = 2 * norm * antiderivative(a); invert it for a.
  auto excess = [u](double a) {
    return 2.0 * kSmoothNorm * QuarticAntiderivative(a) - u;
  };
  double hi = 1.0;
  double f_hi = excess(hi);
  while (f_hi < 0.0 && hi < 1e12) {
    hi *= 2.0;
    f_hi = excess(hi);
  }
  if (f_hi < 0.0) return negative ? -hi : hi;

  auto close_enough = [](double a, double b) {
    return std::abs(b - a) <= 1e-12 * std::max(1.0, std::abs(a));
  };
  std::uintmax_t max_iter = 200;
  const auto [lo_root, hi_root] = boost::math::tools::toms748_solve(
      excess, 0.0, hi, excess(0.0), f_hi, close_enough, max_iter);
  const double magnitude = 0.5 * (lo_root + hi_root);
  return negative ? -magnitude : magnitude;
}

std::vector<Weight> PrivatizeWeightVector(std::span<const Weight> weights,
                                          double epsilon_1,
                                          NoiseStream& stream) {
  if (!PositiveFinite(epsilon_1)) {
    throw DomainError("epsilon_1 must be positive");
  }
  const double p = std::exp(-epsilon_1);
  std::vector<Weight> out(weights.begin(), weights.end());
  for (Weight& w : out) w += DlapSample(p, stream);
  return out;
}

}  // namespace lwdp

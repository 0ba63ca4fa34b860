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

#ifndef LWDP_MECHANISMS_H_
#define LWDP_MECHANISMS_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "lwdp/graph.h"

namespace lwdp {

// Split of a total privacy budget between the weight release (epsilon_1) and
// the count release (epsilon_2).
class PrivacyBudget {
 public:
  // Throws ConfigError unless all values are finite and positive and
  // epsilon_1 + epsilon_2 <= epsilon_total.
  static PrivacyBudget Create(double epsilon_total, double epsilon_1,
                              double epsilon_2);
  // epsilon_1 = epsilon_2 = epsilon_total / 2.
  static PrivacyBudget EvenSplit(double epsilon_total);

  double epsilon_total() const { return epsilon_total_; }
  double epsilon_1() const { return epsilon_1_; }
  double epsilon_2() const { return epsilon_2_; }
  // exp(-epsilon_1), the discrete Laplace parameter of the weight release.
  double p() const;

 private:
  PrivacyBudget(double total, double e1, double e2)
      : epsilon_total_(total), epsilon_1_(e1), epsilon_2_(e2) {}

  double epsilon_total_;
  double epsilon_1_;
  double epsilon_2_;
};

// Logical rounds that draw randomness. Each (node, round) pair owns an
// independent stream.
enum class Round : std::uint32_t {
  kWeightRelease = 1,
  kCountRelease = 2,
};

// A per-party generator. Cheap to create, not thread-safe; give each task
// its own stream.
class NoiseStream {
 public:
  std::mt19937_64& engine() { return engine_; }
  bool noise_disabled() const { return noise_disabled_; }

 private:
  friend class RandomSource;
  NoiseStream(std::uint64_t seed, bool noise_disabled)
      : engine_(seed), noise_disabled_(noise_disabled) {}

  std::mt19937_64 engine_;
  bool noise_disabled_;
};

class RandomSource;
namespace debug {
RandomSource NoiseDisabledSource(std::uint64_t seed);
}  // namespace debug

// Deterministic factory of independent streams derived from one master seed.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  bool noise_disabled() const { return noise_disabled_; }

  // Stream for one party in one round.
  NoiseStream Stream(NodeId node, Round round) const;
  // Stream keyed by an arbitrary label, for harness-level randomness such as
  // graph generation.
  NoiseStream Stream(std::uint64_t label) const;

  // A source whose seed is derived from this one and `index`; used to give
  // each experiment trial its own source.
  RandomSource Fork(std::uint64_t index) const;

 private:
  friend RandomSource debug::NoiseDisabledSource(std::uint64_t seed);

  std::uint64_t seed_;
  bool noise_disabled_ = false;
};

// The SplitMix64 finalizer; a bijective 64-bit mixer.
std::uint64_t Mix64(std::uint64_t x);

// Discrete Laplace pmf (1-p)/(1+p) * p^|i|. Throws DomainError unless
// 0 < p < 1.
double DlapPmf(std::int64_t i, double p);
// Pr[Z < k] for Z ~ DLap(p).
double DlapCdf(std::int64_t k, double p);
// Difference of two i.i.d. geometric variates.
std::int64_t DlapSample(double p, NoiseStream& stream);

// Continuous Laplace with scale b. Throws DomainError unless b > 0.
double LaplaceSample(double scale, NoiseStream& stream);

// Heavy-tailed noise with density proportional to 1 / (1 + |z|^gamma), used to
// release a value calibrated to its smooth sensitivity.
class SmoothNoiseConfig {
 public:
  static constexpr double kDefaultGamma = 4.0;

  // Throws UnsupportedParameterError for gamma != 4 and DomainError unless
  // epsilon_2 > 0.
  static SmoothNoiseConfig Create(double epsilon_2,
                                  double gamma = kDefaultGamma);

  double gamma() const { return gamma_; }
  double epsilon_2() const { return epsilon_2_; }
  // Smoothing parameter epsilon_2 / (2 (gamma - 1)).
  double beta() const;
  // Noise scale per unit of smooth sensitivity,
  // 2 (gamma - 1)^((gamma - 1) / gamma) / epsilon_2.
  double scale_multiplier() const;

 private:
  SmoothNoiseConfig(double gamma, double e2) : gamma_(gamma), epsilon_2_(e2) {}

  double gamma_;
  double epsilon_2_;
};

// Density sqrt(2)/pi / (1 + z^4) and its CDF (gamma = 4).
double SmoothNoiseDensity(double z);
double SmoothNoiseCdf(double z);
// Unit-variance draw by inverting the CDF with bracketed root finding.
double SmoothNoiseSample(const SmoothNoiseConfig& config, NoiseStream& stream);

// Adds i.i.d. DLap(exp(-epsilon_1)) noise to every entry. Throws DomainError
// unless epsilon_1 > 0.
std::vector<Weight> PrivatizeWeightVector(std::span<const Weight> weights,
                                          double epsilon_1,
                                          NoiseStream& stream);

}  // namespace lwdp

#endif  // LWDP_MECHANISMS_H_

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

#include "lwdp/target_index.h"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "lwdp/error.h"

namespace lwdp {
namespace {

void CheckRank(std::int64_t k, std::int64_t lo, std::int64_t n) {
  if (k < lo || k > n) {
    throw SizeError("rank " + std::to_string(k) + " outside [" +
                    std::to_string(lo) + ", " + std::to_string(n) + "]");
  }
}

}  // namespace

SortedPrefixArray::SortedPrefixArray(std::vector<Value> values)
    : p_(std::move(values)) {
  std::sort(p_.begin(), p_.end());
  a_.assign(p_.size() + 1, 0);
  for (std::size_t i = 0; i < p_.size(); ++i) a_[i + 1] = a_[i] + p_[i];
}

std::int64_t SortedPrefixArray::LowerIndex(Value v) const {
  return std::lower_bound(p_.begin(), p_.end(), v) - p_.begin();
}

std::int64_t SortedPrefixArray::UpperIndex(Value v) const {
  return std::upper_bound(p_.begin(), p_.end(), v) - p_.begin();
}

SortedPrefixArray::Split SortedPrefixArray::TwoSided(
    std::int64_t left_end, Value left_anchor, std::int64_t right_begin,
    Value right_anchor, std::int64_t k) const {
  const std::int64_t n_left = left_end;
  const std::int64_t n_right = size() - right_begin;
  // The i-th closest item on each side, 1-indexed.
  auto d_left = [&](std::int64_t i) { return left_anchor - p_[left_end - i]; };
  auto d_right = [&](std::int64_t i) {
    return p_[right_begin + i - 1] - right_anchor;
  };
  // Smallest l such that taking l from the left and k - l from the right
  // yields the k closest items.
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
  Split split;
  split.from_left = lo;
  if (lo > 0) split.distance = d_left(lo);
  if (k - lo > 0) split.distance = std::max(split.distance, d_right(k - lo));
  return split;
}

SortedPrefixArray::Value SortedPrefixArray::TwoSidedSum(
    std::int64_t left_end, Value left_anchor, std::int64_t right_begin,
    Value right_anchor, std::int64_t from_left,
    std::int64_t from_right) const {
  const Value left =
      from_left * left_anchor - (a_[left_end] - a_[left_end - from_left]);
  const Value right = (a_[right_begin + from_right] - a_[right_begin]) -
                      from_right * right_anchor;
  return left + right;
}

DoubleTargetIndex::DoubleTargetIndex(std::vector<Value> values, Value target)
    : SortedPrefixArray(std::move(values)) {
  UpdateTarget(target);
}

void DoubleTargetIndex::UpdateTarget(Value target) {
  t_ = target;
  l0_ = LowerIndex(t_ - 1);
  l1_ = UpperIndex(t_ - 1);
  r0_ = LowerIndex(t_ + 1);
  r1_ = UpperIndex(t_ + 1);
}

DoubleTargetIndex::Value DoubleTargetIndex::Distance(Value x, Value target) {
  return std::min(std::abs(x - (target - 1)), std::abs(x - (target + 1)));
}

DoubleTargetIndex::Value DoubleTargetIndex::KthDistance(std::int64_t k) const {
  CheckRank(k, 1, size());
  const std::int64_t z = zero_count();
  const std::int64_t m = on_target_count();
  if (k <= z) return 0;
  if (k <= z + m) return 1;
  return TwoSided(l0_, t_ - 1, r1_, t_ + 1, k - z - m).distance;
}

DoubleTargetIndex::Value DoubleTargetIndex::SumKDistances(
    std::int64_t k) const {
  CheckRank(k, 0, size());
  const std::int64_t z = zero_count();
  const std::int64_t m = on_target_count();
  if (k <= z) return 0;
  if (k <= z + m) return k - z;
  const std::int64_t rest = k - z - m;
  const Split split = TwoSided(l0_, t_ - 1, r1_, t_ + 1, rest);
  return m + TwoSidedSum(l0_, t_ - 1, r1_, t_ + 1, split.from_left,
                         rest - split.from_left);
}

SingleTargetIndex::SingleTargetIndex(std::vector<Value> values, Value target)
    : SortedPrefixArray(std::move(values)) {
  UpdateTarget(target);
}

void SingleTargetIndex::UpdateTarget(Value target) {
  t_ = target;
  lo_ = LowerIndex(t_);
  hi_ = UpperIndex(t_);
}

SingleTargetIndex::Value SingleTargetIndex::KthDistance(std::int64_t k) const {
  CheckRank(k, 1, size());
  const std::int64_t z = on_target_count();
  if (k <= z) return 0;
  return TwoSided(lo_, t_, hi_, t_, k - z).distance;
}

SingleTargetIndex::Value SingleTargetIndex::SumKDistances(
    std::int64_t k) const {
  CheckRank(k, 0, size());
  const std::int64_t z = on_target_count();
  if (k <= z) return 0;
  const std::int64_t rest = k - z;
  const Split split = TwoSided(lo_, t_, hi_, t_, rest);
  return TwoSidedSum(lo_, t_, hi_, t_, split.from_left,
                     rest - split.from_left);
}

}  // namespace lwdp

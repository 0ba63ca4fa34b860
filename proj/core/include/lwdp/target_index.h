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

#ifndef LWDP_TARGET_INDEX_H_
#define LWDP_TARGET_INDEX_H_

#include <cstdint>
#include <vector>

namespace lwdp {

// Sorted values with prefix sums, answering "k-th smallest distance to the
// current target" queries in O(log n). Shared base of the single- and
// double-target indices below.
class SortedPrefixArray {
 public:
  using Value = std::int64_t;

  // Copies and sorts `values`.
  explicit SortedPrefixArray(std::vector<Value> values);

  std::int64_t size() const { return static_cast<std::int64_t>(p_.size()); }
  const std::vector<Value>& sorted() const { return p_; }

 protected:
  struct Split {
    Value distance = 0;
    std::int64_t from_left = 0;
  };

  // First index with p >= v, and first index with p > v.
  std::int64_t LowerIndex(Value v) const;
  std::int64_t UpperIndex(Value v) const;

  // Selects the k smallest distances among p[0, left_end) measured as
  // left_anchor - p and p[right_begin, n) measured as p - right_anchor.
  Split TwoSided(std::int64_t left_end, Value left_anchor,
                 std::int64_t right_begin, Value right_anchor,
                 std::int64_t k) const;
  // Sum of the distances of the first `from_left` left and `from_right`
  // right items.
  Value TwoSidedSum(std::int64_t left_end, Value left_anchor,
                    std::int64_t right_begin, Value right_anchor,
                    std::int64_t from_left, std::int64_t from_right) const;

  std::vector<Value> p_;
  // a_[i] = p_[0] + ... + p_[i - 1].
  std::vector<Value> a_;
};

// Distances to the target pair {t - 1, t + 1}: d_t(x) = min(|x - t + 1|,
// |x - t - 1|).
//
// The sorted values split into five regions: [0, l0) below t - 1,
// [l0, l1) equal to t - 1, [l1, r0) equal to t, [r0, r1) equal to t + 1, and
// [r1, n) above t + 1. Values on t - 1 or t + 1 are at distance 0, values on
// t at distance 1, and the outer regions are merged by two-sided selection.
class DoubleTargetIndex : public SortedPrefixArray {
 public:
  DoubleTargetIndex(std::vector<Value> values, Value target);

  // Moves the target; O(log n).
  void UpdateTarget(Value target);
  Value target() const { return t_; }

  // 1-indexed; throws SizeError unless 1 <= k <= size().
  Value KthDistance(std::int64_t k) const;
  // Sum of the k smallest distances; throws SizeError unless 0 <= k <= size().
  Value SumKDistances(std::int64_t k) const;

  std::int64_t l0() const { return l0_; }
  std::int64_t l1() const { return l1_; }
  std::int64_t r0() const { return r0_; }
  std::int64_t r1() const { return r1_; }
  // Values on t - 1 or t + 1.
  std::int64_t zero_count() const { return (l1_ - l0_) + (r1_ - r0_); }
  // Values on t.
  std::int64_t on_target_count() const { return r0_ - l1_; }

  static Value Distance(Value x, Value target);

 private:
  Value t_ = 0;
  std::int64_t l0_ = 0;
  std::int64_t l1_ = 0;
  std::int64_t r0_ = 0;
  std::int64_t r1_ = 0;
};

// Distances |x - t| to a single target.
class SingleTargetIndex : public SortedPrefixArray {
 public:
  SingleTargetIndex(std::vector<Value> values, Value target);

  void UpdateTarget(Value target);
  Value target() const { return t_; }

  Value KthDistance(std::int64_t k) const;
  Value SumKDistances(std::int64_t k) const;

  // Values equal to t occupy [lo, hi).
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  std::int64_t on_target_count() const { return hi_ - lo_; }

 private:
  Value t_ = 0;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
};

}  // namespace lwdp

#endif  // LWDP_TARGET_INDEX_H_

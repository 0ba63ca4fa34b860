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

#ifndef LWDP_ORDER_STAT_TREE_H_
#define LWDP_ORDER_STAT_TREE_H_

#include <cstdint>
#include <vector>

namespace lwdp {

// Ordered multiset of 64-bit keys with rank selection and prefix sums.
//
// An AVL tree whose nodes live in a contiguous arena and carry the size and
// key sum of their subtree. Insert, Erase, Select and PrefixSum are all
// O(log n).
class OrderStatTree {
 public:
  using Key = std::int64_t;

  OrderStatTree() = default;

  std::int64_t size() const { return SizeOf(root_); }
  bool empty() const { return size() == 0; }

  void Insert(Key key);
  // Removes one copy of `key`. Returns false if it was absent.
  bool Erase(Key key);
  void Clear();

  // The k-th smallest key, 1-indexed. Select(0) returns 0 so that callers can
  // treat an empty prefix uniformly. Throws SizeError for k > size().
  Key Select(std::int64_t k) const;
  // Sum of the k smallest keys; PrefixSum(0) == 0.
  Key PrefixSum(std::int64_t k) const;

  // Verifies ordering, balance, and the cached size and sum fields.
  bool CheckInvariants() const;

 private:
  static constexpr std::int32_t kNil = -1;

  struct Node {
    Key key;
    Key sum;
    std::int64_t size;
    std::int32_t left;
    std::int32_t right;
    std::int32_t height;
  };

  std::int64_t SizeOf(std::int32_t n) const {
    return n == kNil ? 0 : nodes_[n].size;
  }
  Key SumOf(std::int32_t n) const { return n == kNil ? 0 : nodes_[n].sum; }
  std::int32_t HeightOf(std::int32_t n) const {
    return n == kNil ? 0 : nodes_[n].height;
  }

  std::int32_t NewNode(Key key);
  void Update(std::int32_t n);
  std::int32_t RotateLeft(std::int32_t n);
  std::int32_t RotateRight(std::int32_t n);
  std::int32_t Rebalance(std::int32_t n);
  std::int32_t InsertAt(std::int32_t n, Key key);
  std::int32_t EraseAt(std::int32_t n, Key key, bool& erased);
  std::int32_t DetachMin(std::int32_t n, std::int32_t& min_node);
  bool CheckAt(std::int32_t n, const Key* lo, const Key* hi,
               std::int32_t& height) const;

  std::vector<Node> nodes_;
  std::vector<std::int32_t> free_;
  std::int32_t root_ = kNil;
};

}  // namespace lwdp

#endif  // LWDP_ORDER_STAT_TREE_H_

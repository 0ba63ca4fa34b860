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

#include "lwdp/order_stat_tree.h"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "lwdp/error.h"

namespace lwdp {

std::int32_t OrderStatTree::NewNode(Key key) {
  const Node node{key, key, 1, kNil, kNil, 1};
  if (!free_.empty()) {
    const std::int32_t id = free_.back();
    free_.pop_back();
    nodes_[id] = node;
    return id;
  }
  nodes_.push_back(node);
  return static_cast<std::int32_t>(nodes_.size() - 1);
}

void OrderStatTree::Update(std::int32_t n) {
  Node& node = nodes_[n];
  node.size = 1 + SizeOf(node.left) + SizeOf(node.right);
  node.sum = node.key + SumOf(node.left) + SumOf(node.right);
  node.height = 1 + std::max(HeightOf(node.left), HeightOf(node.right));
}

std::int32_t OrderStatTree::RotateLeft(std::int32_t n) {
  const std::int32_t r = nodes_[n].right;
  nodes_[n].right = nodes_[r].left;
  nodes_[r].left = n;
  Update(n);
  Update(r);
  return r;
}

std::int32_t OrderStatTree::RotateRight(std::int32_t n) {
  const std::int32_t l = nodes_[n].left;
  nodes_[n].left = nodes_[l].right;
  nodes_[l].right = n;
  Update(n);
  Update(l);
  return l;
}

std::int32_t OrderStatTree::Rebalance(std::int32_t n) {
  Update(n);
  const int balance = HeightOf(nodes_[n].left) - HeightOf(nodes_[n].right);
  if (balance > 1) {
    const std::int32_t l = nodes_[n].left;
    if (HeightOf(nodes_[l].left) < HeightOf(nodes_[l].right)) {
      nodes_[n].left = RotateLeft(l);
    }
    return RotateRight(n);
  }
  if (balance < -1) {
    const std::int32_t r = nodes_[n].right;
    if (HeightOf(nodes_[r].right) < HeightOf(nodes_[r].left)) {
      nodes_[n].right = RotateRight(r);
    }
    return RotateLeft(n);
  }
  return n;
}

std::int32_t OrderStatTree::InsertAt(std::int32_t n, Key key) {
  if (n == kNil) return NewNode(key);
  if (key < nodes_[n].key) {
    const std::int32_t child = InsertAt(nodes_[n].left, key);
    nodes_[n].left = child;
  } else {
    const std::int32_t child = InsertAt(nodes_[n].right, key);
    nodes_[n].right = child;
  }
  return Rebalance(n);
}

std::int32_t OrderStatTree::DetachMin(std::int32_t n, std::int32_t& min_node) {
  if (nodes_[n].left == kNil) {
    min_node = n;
    return nodes_[n].right;
  }
  const std::int32_t child = DetachMin(nodes_[n].left, min_node);
  nodes_[n].left = child;
  return Rebalance(n);
}

std::int32_t OrderStatTree::EraseAt(std::int32_t n, Key key, bool& erased) {
  if (n == kNil) return kNil;
  if (key < nodes_[n].key) {
    const std::int32_t child = EraseAt(nodes_[n].left, key, erased);
    nodes_[n].left = child;
  } else if (nodes_[n].key < key) {
    const std::int32_t child = EraseAt(nodes_[n].right, key, erased);
    nodes_[n].right = child;
  } else {
    erased = true;
    const std::int32_t left = nodes_[n].left;
    const std::int32_t right = nodes_[n].right;
    free_.push_back(n);
    if (left == kNil) return right;
    if (right == kNil) return left;
    std::int32_t successor = kNil;
    const std::int32_t rest = DetachMin(right, successor);
    nodes_[successor].left = left;
    nodes_[successor].right = rest;
    return Rebalance(successor);
  }
  return Rebalance(n);
}

void OrderStatTree::Insert(Key key) { root_ = InsertAt(root_, key); }

bool OrderStatTree::Erase(Key key) {
  bool erased = false;
  root_ = EraseAt(root_, key, erased);
  return erased;
}

void OrderStatTree::Clear() {
  nodes_.clear();
  free_.clear();
  root_ = kNil;
}

OrderStatTree::Key OrderStatTree::Select(std::int64_t k) const {
  if (k < 0 || k > size()) {
    throw SizeError("select rank " + std::to_string(k) + " outside [0, " +
                    std::to_string(size()) + "]");
  }
  if (k == 0) return 0;
  std::int32_t n = root_;
  while (true) {
    const std::int64_t left_size = SizeOf(nodes_[n].left);
    if (k <= left_size) {
      n = nodes_[n].left;
    } else if (k == left_size + 1) {
      return nodes_[n].key;
    } else {
      k -= left_size + 1;
      n = nodes_[n].right;
    }
  }
}

OrderStatTree::Key OrderStatTree::PrefixSum(std::int64_t k) const {
  if (k < 0 || k > size()) {
    throw SizeError("prefix length " + std::to_string(k) + " outside [0, " +
                    std::to_string(size()) + "]");
  }
  Key total = 0;
  std::int32_t n = root_;
  while (k > 0) {
    const std::int64_t left_size = SizeOf(nodes_[n].left);
    if (k <= left_size) {
      n = nodes_[n].left;
    } else {
      total += SumOf(nodes_[n].left) + nodes_[n].key;
      k -= left_size + 1;
      n = nodes_[n].right;
    }
  }
  return total;
}

bool OrderStatTree::CheckAt(std::int32_t n, const Key* lo, const Key* hi,
                            std::int32_t& height) const {
  if (n == kNil) {
    height = 0;
    return true;
  }
  const Node& node = nodes_[n];
  if ((lo != nullptr && node.key < *lo) || (hi != nullptr && node.key > *hi)) {
    return false;
  }
  std::int32_t hl = 0;
  std::int32_t hr = 0;
  if (!CheckAt(node.left, lo, &node.key, hl) ||
      !CheckAt(node.right, &node.key, hi, hr)) {
    return false;
  }
  height = 1 + std::max(hl, hr);
  return std::abs(hl - hr) <= 1 && node.height == height &&
         node.size == 1 + SizeOf(node.left) + SizeOf(node.right) &&
         node.sum == node.key + SumOf(node.left) + SumOf(node.right);
}

bool OrderStatTree::CheckInvariants() const {
  std::int32_t height = 0;
  return CheckAt(root_, nullptr, nullptr, height);
}

}  // namespace lwdp

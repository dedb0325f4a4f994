// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nqsym/composition.hpp"
#include "nqsym/permutation.hpp"

namespace nqsym {

using Block = std::vector<int>;  // sorted, distinct positive integers

// A sequence of nonempty, pairwise disjoint blocks.
class OrderedPartition {
 public:
  OrderedPartition() = default;
  explicit OrderedPartition(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const& noexcept { return blocks_; }
  std::vector<Block> blocks() && noexcept { return std::move(blocks_); }
  std::size_t size() const noexcept { return blocks_.size(); }
  const Block& operator[](std::size_t i) const { return blocks_[i]; }

  // Block sizes.
  Composition type() const;
  // Union of the blocks, sorted.
  std::vector<int> support() const;

  friend bool operator==(const OrderedPartition&,
                         const OrderedPartition&) = default;
  friend auto operator<=>(const OrderedPartition& a,
                          const OrderedPartition& b) {
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::vector<Block> blocks_;
};

// An unordered collection of nonempty, pairwise disjoint blocks. Stored
// canonically with blocks sorted by their least element.
class SetPartition {
 public:
  SetPartition() = default;
  explicit SetPartition(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const& noexcept { return blocks_; }
  std::vector<Block> blocks() && noexcept { return std::move(blocks_); }
  std::size_t size() const noexcept { return blocks_.size(); }
  std::vector<int> support() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  std::vector<Block> blocks_;
};

// Each segment of the type-t segmentation of p, taken as a set.
OrderedPartition induced_partition_by_type(const Permutation& p,
                                           const Composition& t);

// All permutations whose induced partition of type tau(K) is K, in
// lexicographic order. Size is the product of the block factorials.
std::vector<Permutation> fibre(const OrderedPartition& k);

// Coarsest segmentation of p whose segments each lie in one block of T.
OrderedPartition induced_partition_by_set_partition(const Permutation& p,
                                                    const SetPartition& t);

// For 1-based i < k: every x in K_i, y in K_{i+1} has x > y when i is odd and
// x < y when i is even.
bool is_alternating(const OrderedPartition& k);

}  // namespace nqsym

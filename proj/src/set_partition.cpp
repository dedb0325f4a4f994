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

#include "nqsym/set_partition.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nqsym/error.hpp"

namespace nqsym {

namespace {

std::vector<Block> normalized_disjoint_blocks(std::vector<Block> blocks) {
  std::set<int> seen;
  for (auto& b : blocks) {
    require(!b.empty(), "partition blocks must be nonempty");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      require(x >= 1, "partition elements must be positive");
      require(seen.insert(x).second,
              "partition blocks must be disjoint, repeated " +
                  std::to_string(x));
    }
  }
  return blocks;
}

std::vector<int> union_of(const std::vector<Block>& blocks) {
  std::vector<int> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

OrderedPartition::OrderedPartition(std::vector<Block> blocks)
    : blocks_(normalized_disjoint_blocks(std::move(blocks))) {}

Composition OrderedPartition::type() const {
  std::vector<int> sizes;
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  return Composition(std::move(sizes));
}

std::vector<int> OrderedPartition::support() const { return union_of(blocks_); }

SetPartition::SetPartition(std::vector<Block> blocks)
    : blocks_(normalized_disjoint_blocks(std::move(blocks))) {
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

std::vector<int> SetPartition::support() const { return union_of(blocks_); }

OrderedPartition induced_partition_by_type(const Permutation& p,
                                           const Composition& t) {
  return OrderedPartition(segment(p, t));
}

std::vector<Permutation> fibre(const OrderedPartition& k) {
  std::vector<Block> current = k.blocks();  // each block sorted
  std::vector<Permutation> out;
  // Odometer over per-block permutations; the last block turns fastest,
  // which yields lexicographic order of the concatenations.
  while (true) {
    std::vector<int> entries;
    for (const auto& b : current) entries.insert(entries.end(), b.begin(), b.end());
    out.emplace_back(std::move(entries));
    std::size_t i = current.size();
    while (i > 0) {
      --i;
      if (std::next_permutation(current[i].begin(), current[i].end())) break;
      if (i == 0) return out;  // all blocks wrapped around
    }
    if (current.empty()) return out;
  }
}

OrderedPartition induced_partition_by_set_partition(const Permutation& p,
                                                    const SetPartition& t) {
  std::vector<int> sorted_entries = p.entries();
  std::sort(sorted_entries.begin(), sorted_entries.end());
  require(sorted_entries == t.support(),
          "set partition must partition the entries of the permutation");
  std::map<int, std::size_t> block_of;
  for (std::size_t i = 0; i < t.blocks().size(); ++i)
    for (int x : t.blocks()[i]) block_of[x] = i;

  std::vector<Block> blocks;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == 0 || block_of[p[i]] != block_of[p[i - 1]]) blocks.emplace_back();
    blocks.back().push_back(p[i]);
  }
  return OrderedPartition(std::move(blocks));
}

bool is_alternating(const OrderedPartition& k) {
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    const Block& here = k[i];
    const Block& next = k[i + 1];
    bool odd_index = i % 2 == 0;  // 1-based index i+1
    if (odd_index ? !(here.front() > next.back()) : !(here.back() < next.front()))
      return false;
  }
  return true;
}

}  // namespace nqsym

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
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "nqsym/composition.hpp"
#include "nqsym/permutation.hpp"
#include "nqsym/set_partition.hpp"

namespace nqsym {

class QSymElement;

struct EnumerationOptions {
  // Linear extensions can number n!; larger posets fail with
  // ErrorKind::ResourceLimit instead of running unbounded.
  int max_elements = 12;
};

// A strict partial order on a finite set of distinct positive labels.
// Elements are indexed 0..n-1 in increasing label order; order queries use
// per-element bitsets of the transitive closure.
class LabeledPoset {
 public:
  static constexpr int kMaxElements = 64;

  LabeledPoset() = default;
  // `relations` holds pairs (x, y) meaning x < y; they need not be covers.
  // Cycles are rejected.
  LabeledPoset(std::vector<int> labels,
               const std::vector<std::pair<int, int>>& relations);

  static LabeledPoset antichain(std::vector<int> labels);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const& noexcept { return labels_; }
  std::vector<int> labels() && noexcept { return std::move(labels_); }
  int label(int index) const { return labels_[static_cast<std::size_t>(index)]; }
  int index_of(int label) const;
  bool contains(int label) const;

  // Order queries by label.
  bool less(int x, int y) const;
  bool comparable(int x, int y) const { return less(x, y) || less(y, x); }

  // Bitset over indices of the elements strictly below / above index i.
  std::uint64_t below(int index) const { return below_[static_cast<std::size_t>(index)]; }
  std::uint64_t above(int index) const { return above_[static_cast<std::size_t>(index)]; }

  // Cover relations (x, y) by label, sorted.
  std::vector<std::pair<int, int>> covers() const;

  bool is_antichain(std::span<const int> labels) const;

  friend bool operator==(const LabeledPoset& a, const LabeledPoset& b) {
    return a.labels_ == b.labels_ && a.below_ == b.below_;
  }

 private:
  std::vector<int> labels_;
  std::vector<std::uint64_t> below_;
  std::vector<std::uint64_t> above_;
};

// Visits every linear extension once, in lexicographic order. The visitor
// returns false to stop early; the function reports whether it ran to the end.
bool for_each_linear_extension(
    const LabeledPoset& p,
    const std::function<bool(std::span<const int>)>& visit,
    EnumerationOptions options = {});

std::vector<Permutation> linear_extensions(const LabeledPoset& p,
                                           EnumerationOptions options = {});

// Sum of L_{runs(pi)} over the linear extensions of p (fundamental basis).
QSymElement qsym_of_poset(const LabeledPoset& p, EnumerationOptions options = {});

// Every element of p below every element of q. Label sets must be disjoint.
LabeledPoset ordinal_sum(const LabeledPoset& p, const LabeledPoset& q);

// Disjoint union with p relabeled order-preservingly onto 1..|p| and q onto
// |p|+1..|p|+|q|.
LabeledPoset disjoint_sum_relabeled(const LabeledPoset& p,
                                    const LabeledPoset& q);

// Ordinal sum of antichains A_1 + ... + A_m, |A_i| = a_i, with the
// even-indexed antichains A_2, A_4, ... labeled first by 1, 2, ... and the
// odd-indexed ones after them, increasing inside each antichain.
LabeledPoset build_p_alpha(const Composition& a);
// The antichain label sets of build_p_alpha(a), in rank order.
std::vector<Block> p_alpha_antichains(const Composition& a);

// K_1 + ... + K_k with each block an antichain.
LabeledPoset build_p_k(const OrderedPartition& k);

// Induced ordered partitions of T over all linear extensions, deduplicated,
// in order of first appearance.
std::vector<OrderedPartition> decompose_by(const LabeledPoset& p,
                                           const SetPartition& t,
                                           EnumerationOptions options = {});
bool is_antichain_inducing(const LabeledPoset& p, const SetPartition& t,
                           EnumerationOptions options = {});

// Counts, by type, the ordered partitions that an antichain-inducing T
// induces on the linear extensions of p. Builds the block sequences directly
// (each block: currently available elements of one part of T, consecutive
// blocks in different parts) instead of walking linear extensions. The
// result is only meaningful when T is antichain-inducing.
std::map<Composition, std::uint64_t> induced_type_counts(const LabeledPoset& p,
                                                         const SetPartition& t);

// Same, on a bare order given as per-element "below" bitsets and a list of
// part masks.
std::map<Composition, std::uint64_t> induced_type_counts(
    std::span<const std::uint64_t> below, std::span<const std::uint64_t> parts);

enum class LabelingKind { Strict, Natural, Neither, Both };

LabelingKind labeling_kind(const LabeledPoset& p);

// The relabeled disjoint sum of P_a and P_b used for the N-basis product:
// even-indexed antichains of both take labels 1..m in order, then the
// odd-indexed ones take m+1..|a|+|b|; T = {odd-indexed union, even-indexed
// union}.
struct ProductPoset {
  LabeledPoset poset;
  SetPartition split;
};

ProductPoset nbasis_product_poset(const Composition& a, const Composition& b);

}  // namespace nqsym

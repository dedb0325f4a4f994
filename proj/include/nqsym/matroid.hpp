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
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "nqsym/composition.hpp"
#include "nqsym/poset.hpp"
#include "nqsym/qsym.hpp"
#include "nqsym/set_partition.hpp"

namespace nqsym {

// Subsets of the ground set [n] as bitmasks, bit i-1 standing for element i.
using Subset = std::uint32_t;

Subset to_mask(std::span<const int> elements);
std::vector<int> to_elements(Subset s);

// True iff every pair of sets satisfies the basis exchange axiom.
bool satisfies_exchange(std::span<const Subset> bases);

// A matroid on [n] given by its bases.
class Matroid {
 public:
  static constexpr int kMaxGroundSet = 24;

  // Rejects an empty basis family, sets of unequal size, elements outside
  // [n] and exchange violations.
  Matroid(int n, std::vector<Subset> bases);
  static Matroid from_lists(int n, const std::vector<std::vector<int>>& bases);

  int ground_size() const noexcept { return n_; }
  int rank() const noexcept { return rank_; }
  const std::vector<Subset>& bases() const& noexcept { return bases_; }
  std::vector<Subset> bases() && noexcept { return std::move(bases_); }
  std::vector<std::vector<int>> basis_lists() const;
  bool is_basis(Subset b) const;

  std::vector<int> loops() const;
  std::vector<int> coloops() const;
  // Size of a largest basis intersection with A.
  int rank_of(Subset a) const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  int n_ = 0;
  int rank_ = 0;
  std::vector<Subset> bases_;  // sorted
};

Matroid uniform(int r, int n);
Matroid dual(const Matroid& m);
// Ground set of the second summand shifted by the size of the first.
Matroid direct_sum(const Matroid& a, const Matroid& b);
// Restriction to A and contraction of A; the remaining elements are
// renumbered 1, 2, ... in increasing order.
Matroid restriction(const Matroid& m, std::span<const int> a);
Matroid contraction(const Matroid& m, std::span<const int> a);
// Classes of "both lie in a common circuit"; loops and coloops are
// singleton components. Sorted by least element.
std::vector<std::vector<int>> components(const Matroid& m);
std::vector<std::vector<int>> circuits(const Matroid& m);

// Rank two matroid whose bases are the pairs meeting two distinct blocks;
// elements of [n] outside every block are loops.
Matroid rank2_from_blocks(int n, const std::vector<Block>& blocks);
// Consecutive intervals of sizes parts[0], parts[1], ... .
std::vector<Block> interval_blocks(const Composition& parts);
// M_lambda with interval blocks in weakly decreasing part order.
Matroid rank2_from_partition(const Composition& lambda);

// Exchange poset of basis B, strictly labeled: cobase elements take labels
// 1..n-r and base elements n-r+1..n, each side in increasing element order.
LabeledPoset base_poset(const Matroid& m, Subset b);

// F(M) in the N basis. Each base poset is split into its minimal elements
// and the rest; the induced ordered partitions are alternating, so their
// types give N-coefficients directly.
QSymElement qsym_of_matroid(const Matroid& m);
// F(M) from every linear extension of every base poset (L, then N).
QSymElement qsym_of_matroid_by_enumeration(const Matroid& m,
                                           EnumerationOptions options = {});

// Largest last part of an odd-length composition in supp(q), 0 if none.
int loops_coloops_from_qsym(const QSymElement& q);

// Pairs (B, e in B, f outside B) with B - e + f not a basis.
std::uint64_t missing_exchange_count(const Matroid& m);

int polytope_dim(const Matroid& m);
bool polytope_edge(const Matroid& m, Subset b1, Subset b2);

// Random matroid on [n] of rank r: starts from U_{r,n} and deletes bases
// in random order whenever the rest still satisfies the exchange axiom
// (and, if requested, still covers every element).
Matroid random_matroid(int n, int r, std::mt19937_64& rng, bool loopless);

struct DualityReport {
  bool monomial_form = false;   // M-coefficients of F(M*) are reversed
  bool n_form_applies = false;  // no loops and no coloops
  bool n_form = false;          // N-coefficients of F(M*) are reversed
  bool grading = false;         // F(M*) in V^n_{n-r+c}, c = #coloops
};

DualityReport duality_check(const Matroid& m);

// Reverses every composition of q.
QSymElement reversed(const QSymElement& q);

}  // namespace nqsym

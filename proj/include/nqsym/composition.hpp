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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nqsym {

// A finite sequence of positive integers. The empty sequence is the zero
// composition, the only one of weight and length 0.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  // Accepts "13212" (digit notation, every part < 10), "1,3,2" or "" / "0"
  // for the zero composition.
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const& noexcept { return parts_; }
  std::vector<int> parts() && noexcept { return std::move(parts_); }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }
  int back() const { return parts_.back(); }

  int weight() const noexcept;

  // Digit string when every part is below 10, otherwise comma separated.
  // The zero composition prints as "0".
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a,
                                          const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

// Sum of the odd-indexed parts (1-based): a1 + a3 + a5 + ...
int rank(const Composition& a);
// Sum of the even-indexed parts; rank(a) + corank(a) == weight(a).
int corank(const Composition& a);

// {a1, a1+a2, ..., a1+...+a_{m-1}} as a sorted vector.
std::vector<int> to_subset(const Composition& a);
// Inverse of to_subset for compositions of weight n; rejects S outside [n-1].
Composition from_subset(std::span<const int> subset, int n);

// Bit i-1 is set when i belongs to to_subset(a). Weight must be at most 64.
std::uint64_t subset_mask(const Composition& a);
Composition from_subset_mask(std::uint64_t mask, int n);

// True iff `finer` refines `coarser`.
bool refines(const Composition& finer, const Composition& coarser);

Composition reversal(const Composition& a);
Composition concat(const Composition& a, const Composition& b);

// a1 zeros, a2 ones, a3 zeros, ...
std::vector<int> binary_word(const Composition& a);

// Lexicographic comparison of binary words; weights must agree.
std::strong_ordering binary_word_compare(const Composition& a,
                                         const Composition& b);

// Total order on all compositions: weight first, then binary word. This is
// the canonical order for every composition-indexed container.
struct GradedBinaryWordLess {
  bool operator()(const Composition& a, const Composition& b) const;
};

enum class CompositionOrder { BinaryWord, Lexicographic };

std::vector<Composition> compositions_of(
    int n, CompositionOrder order = CompositionOrder::BinaryWord);
std::vector<Composition> compositions_of_rank(int n, int r);

// Partitions of n as weakly decreasing compositions, in reverse
// lexicographic order ((n) first).
std::vector<Composition> partitions_of(int n);

bool is_partition(const Composition& a);
// Decreasing rearrangement of the parts.
Composition sorted_decreasing(const Composition& a);

}  // namespace nqsym

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

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nqsym/composition.hpp"

namespace nqsym {

// Any sequence of distinct positive integers.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries);

  // "934756218" (entries 1..9) or "9,3,4".
  static Permutation parse(std::string_view text);

  const std::vector<int>& entries() const& noexcept { return entries_; }
  std::vector<int> entries() && noexcept { return std::move(entries_); }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

// Lengths of the maximal increasing runs.
Composition runs(const Permutation& p);

// Digit i is 1 iff i = 1 or p(i-1) < p(i).
std::vector<int> ascent_word(const Permutation& p);

// Run-length composition of ascent_word(p).
Composition rho(const Permutation& p);

// Run composition of any permutation whose rho is `r`; the map rho -> runs
// is a bijection on compositions of a fixed weight.
Composition runs_from_rho(const Composition& r);

// Consecutive segments of lengths t1, t2, ...
std::vector<std::vector<int>> segment(const Permutation& p,
                                      const Composition& type);

}  // namespace nqsym

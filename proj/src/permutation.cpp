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

#include "nqsym/permutation.hpp"

#include <algorithm>
#include <unordered_set>

#include "nqsym/error.hpp"

namespace nqsym {

Permutation::Permutation(std::vector<int> entries)
    : entries_(std::move(entries)) {
  std::unordered_set<int> seen;
  for (int e : entries_) {
    require(e >= 1, "permutation entries must be positive");
    require(seen.insert(e).second,
            "permutation entries must be distinct, repeated " +
                std::to_string(e));
  }
}

Permutation::Permutation(std::initializer_list<int> entries)
    : Permutation(std::vector<int>(entries)) {}

Permutation Permutation::parse(std::string_view text) {
  // Same token rules as compositions; the zero composition maps to empty.
  return Permutation(Composition::parse(text).parts());
}

std::string Permutation::to_string() const {
  return Composition(entries_).to_string();
}

Composition runs(const Permutation& p) {
  require(!p.empty(), "runs of an empty permutation");
  std::vector<int> parts;
  int run = 1;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i - 1] < p[i]) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

std::vector<int> ascent_word(const Permutation& p) {
  require(!p.empty(), "ascent word of an empty permutation");
  std::vector<int> word(p.size());
  word[0] = 1;
  for (std::size_t i = 1; i < p.size(); ++i) word[i] = p[i - 1] < p[i] ? 1 : 0;
  return word;
}

Composition rho(const Permutation& p) {
  auto word = ascent_word(p);
  std::vector<int> parts;
  int run = 1;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] == word[i - 1]) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

Composition runs_from_rho(const Composition& r) {
  // Rebuild the ascent word (r1 ones, r2 zeros, ...) and cut the runs at
  // every zero digit, which marks a descent just before it.
  const int n = r.weight();
  require(n >= 1, "rho composition must be nonzero");
  std::vector<int> word;
  for (std::size_t i = 0; i < r.length(); ++i)
    word.insert(word.end(), static_cast<std::size_t>(r[i]), i % 2 == 0 ? 1 : 0);
  std::vector<int> descents;
  for (int i = 1; i < n; ++i)
    if (word[static_cast<std::size_t>(i)] == 0) descents.push_back(i);
  return from_subset(descents, n);
}

std::vector<std::vector<int>> segment(const Permutation& p,
                                      const Composition& type) {
  require(type.weight() == static_cast<int>(p.size()),
          "segmentation type must have weight equal to the permutation length");
  std::vector<std::vector<int>> segments;
  auto it = p.begin();
  for (int len : type) {
    segments.emplace_back(it, it + len);
    it += len;
  }
  return segments;
}

}  // namespace nqsym

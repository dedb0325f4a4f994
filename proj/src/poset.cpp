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

#include "nqsym/poset.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <unordered_map>

#include "nqsym/error.hpp"
#include "nqsym/qsym.hpp"

namespace nqsym {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : bit(n) - 1; }

}  // namespace

LabeledPoset::LabeledPoset(std::vector<int> labels,
                           const std::vector<std::pair<int, int>>& relations)
    : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  require(static_cast<int>(labels_.size()) <= kMaxElements,
          "posets are limited to " + std::to_string(kMaxElements) + " elements");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    require(labels_[i] >= 1, "poset labels must be positive");
    require(i == 0 || labels_[i] != labels_[i - 1],
            "poset labels must be distinct, repeated " + std::to_string(labels_[i]));
  }
  const int n = size();
  below_.assign(static_cast<std::size_t>(n), 0);
  for (const auto& [x, y] : relations) {
    require(contains(x) && contains(y),
            "relation " + std::to_string(x) + "<" + std::to_string(y) +
                " mentions an unknown label");
    require(x != y, "relation " + std::to_string(x) + "<" + std::to_string(x) +
                        " is not irreflexive");
    below_[static_cast<std::size_t>(index_of(y))] |= bit(index_of(x));
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (below_[static_cast<std::size_t>(i)] & bit(k))
        below_[static_cast<std::size_t>(i)] |= below_[static_cast<std::size_t>(k)];
  above_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    require(!(below_[static_cast<std::size_t>(i)] & bit(i)),
            "relations contain a cycle through " + std::to_string(label(i)));
    for (int j = 0; j < n; ++j)
      if (below_[static_cast<std::size_t>(i)] & bit(j))
        above_[static_cast<std::size_t>(j)] |= bit(i);
  }
}

LabeledPoset LabeledPoset::antichain(std::vector<int> labels) {
  return LabeledPoset(std::move(labels), {});
}

int LabeledPoset::index_of(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  require(it != labels_.end() && *it == label,
          "label " + std::to_string(label) + " is not in the poset");
  return static_cast<int>(it - labels_.begin());
}

bool LabeledPoset::contains(int label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool LabeledPoset::less(int x, int y) const {
  return (below(index_of(y)) & bit(index_of(x))) != 0;
}

std::vector<std::pair<int, int>> LabeledPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int y = 0; y < size(); ++y) {
    std::uint64_t lower = below(y);
    for (int x = 0; x < size(); ++x) {
      if (!(lower & bit(x))) continue;
      // x is covered by y unless some z sits strictly between them.
      if ((above(x) & lower) == 0) out.emplace_back(label(x), label(y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool LabeledPoset::is_antichain(std::span<const int> labels) const {
  std::uint64_t mask = 0;
  for (int x : labels) mask |= bit(index_of(x));
  for (int x : labels)
    if (below(index_of(x)) & mask) return false;
  return true;
}

bool for_each_linear_extension(
    const LabeledPoset& p,
    const std::function<bool(std::span<const int>)>& visit,
    EnumerationOptions options) {
  const int n = p.size();
  if (n > options.max_elements)
    fail(ErrorKind::ResourceLimit,
         "linear extension enumeration is limited to " +
             std::to_string(options.max_elements) + " elements, poset has " +
             std::to_string(n));
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  bool stopped = false;
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t placed) {
    if (static_cast<int>(word.size()) == n) {
      if (!visit(word)) stopped = true;
      return;
    }
    for (int i = 0; i < n && !stopped; ++i) {
      if ((placed & bit(i)) || (p.below(i) & ~placed)) continue;
      word.push_back(p.label(i));
      extend(placed | bit(i));
      word.pop_back();
    }
  };
  extend(0);
  return !stopped;
}

std::vector<Permutation> linear_extensions(const LabeledPoset& p,
                                           EnumerationOptions options) {
  std::vector<Permutation> out;
  for_each_linear_extension(
      p,
      [&](std::span<const int> w) {
        out.emplace_back(std::vector<int>(w.begin(), w.end()));
        return true;
      },
      options);
  return out;
}

QSymElement qsym_of_poset(const LabeledPoset& p, EnumerationOptions options) {
  // Count descent sets first; building compositions per extension is slower.
  std::unordered_map<std::uint64_t, std::uint64_t> by_descents;
  for_each_linear_extension(
      p,
      [&](std::span<const int> w) {
        std::uint64_t mask = 0;
        for (std::size_t i = 1; i < w.size(); ++i)
          if (w[i - 1] > w[i]) mask |= bit(static_cast<int>(i) - 1);
        ++by_descents[mask];
        return true;
      },
      options);
  QSymElement out(Basis::Fundamental);
  for (const auto& [mask, count] : by_descents)
    out.add_term(from_subset_mask(mask, p.size()), Rational(count));
  return out;
}

LabeledPoset ordinal_sum(const LabeledPoset& p, const LabeledPoset& q) {
  std::vector<int> labels = p.labels();
  for (int y : q.labels()) {
    require(!p.contains(y),
            "ordinal sum needs disjoint label sets, both contain " + std::to_string(y));
    labels.push_back(y);
  }
  std::vector<std::pair<int, int>> relations = p.covers();
  for (const auto& c : q.covers()) relations.push_back(c);
  for (int x : p.labels())
    for (int y : q.labels()) relations.emplace_back(x, y);
  return LabeledPoset(std::move(labels), relations);
}

LabeledPoset disjoint_sum_relabeled(const LabeledPoset& p,
                                    const LabeledPoset& q) {
  const int offset = p.size();
  std::vector<int> labels;
  for (int i = 1; i <= p.size() + q.size(); ++i) labels.push_back(i);
  std::vector<std::pair<int, int>> relations;
  for (const auto& [x, y] : p.covers())
    relations.emplace_back(p.index_of(x) + 1, p.index_of(y) + 1);
  for (const auto& [x, y] : q.covers())
    relations.emplace_back(offset + q.index_of(x) + 1, offset + q.index_of(y) + 1);
  return LabeledPoset(std::move(labels), relations);
}

namespace {

// Ordinal sum of antichains with the given label sets.
LabeledPoset stacked_antichains(const std::vector<Block>& levels) {
  std::vector<int> labels;
  std::vector<std::pair<int, int>> relations;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    labels.insert(labels.end(), levels[i].begin(), levels[i].end());
    if (i + 1 < levels.size())
      for (int x : levels[i])
        for (int y : levels[i + 1]) relations.emplace_back(x, y);
  }
  return LabeledPoset(std::move(labels), relations);
}

// Assigns consecutive labels from `next` to the antichains at the listed
// positions.
void assign_levels(std::vector<Block>& levels, const Composition& a,
                   std::size_t first, int& next) {
  for (std::size_t i = first; i < a.length(); i += 2)
    for (int j = 0; j < a[i]; ++j) levels[i].push_back(next++);
}

}  // namespace

std::vector<Block> p_alpha_antichains(const Composition& a) {
  require(!a.empty(), "P_a needs a nonzero composition");
  std::vector<Block> levels(a.length());
  int next = 1;
  assign_levels(levels, a, 1, next);  // A_2, A_4, ...
  assign_levels(levels, a, 0, next);  // A_1, A_3, ...
  return levels;
}

LabeledPoset build_p_alpha(const Composition& a) {
  return stacked_antichains(p_alpha_antichains(a));
}

LabeledPoset build_p_k(const OrderedPartition& k) {
  return stacked_antichains(k.blocks());
}

namespace {

void require_partition_of_labels(const LabeledPoset& p, const SetPartition& t) {
  require(t.support() == p.labels(),
          "set partition must partition the labels of the poset");
}

}  // namespace

std::vector<OrderedPartition> decompose_by(const LabeledPoset& p,
                                           const SetPartition& t,
                                           EnumerationOptions options) {
  require_partition_of_labels(p, t);
  std::vector<OrderedPartition> out;
  std::set<OrderedPartition> seen;
  for_each_linear_extension(
      p,
      [&](std::span<const int> w) {
        Permutation pi(std::vector<int>(w.begin(), w.end()));
        OrderedPartition k = induced_partition_by_set_partition(pi, t);
        if (seen.insert(k).second) out.push_back(std::move(k));
        return true;
      },
      options);
  return out;
}

bool is_antichain_inducing(const LabeledPoset& p, const SetPartition& t,
                           EnumerationOptions options) {
  for (const auto& k : decompose_by(p, t, options))
    for (const auto& block : k.blocks())
      if (!p.is_antichain(block)) return false;
  return true;
}

namespace {

class TypeCounter {
 public:
  using Counts = std::map<std::vector<int>, std::uint64_t>;

  TypeCounter(std::span<const std::uint64_t> below,
              std::span<const std::uint64_t> parts)
      : below_(below), parts_(parts), n_(static_cast<int>(below.size())) {}

  const Counts& count(std::uint64_t placed, std::size_t last) {
    const std::uint64_t key = placed * (parts_.size() + 1) + last;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Counts result;
    if (placed == full_mask(n_)) {
      result.emplace(std::vector<int>{}, 1);
    } else {
      std::uint64_t available = 0;
      for (int i = 0; i < n_; ++i)
        if (!(placed & bit(i)) && !(below_[static_cast<std::size_t>(i)] & ~placed))
          available |= bit(i);
      for (std::size_t t = 0; t < parts_.size(); ++t) {
        if (t == last) continue;
        const std::uint64_t choices = available & parts_[t];
        for (std::uint64_t s = choices; s != 0; s = (s - 1) & choices) {
          const int block_size = std::popcount(s);
          for (const auto& [tail, c] : count(placed | s, t)) {
            std::vector<int> type;
            type.reserve(tail.size() + 1);
            type.push_back(block_size);
            type.insert(type.end(), tail.begin(), tail.end());
            result[std::move(type)] += c;
          }
        }
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  std::span<const std::uint64_t> below_;
  std::span<const std::uint64_t> parts_;
  int n_;
  std::unordered_map<std::uint64_t, Counts> memo_;
};

}  // namespace

std::map<Composition, std::uint64_t> induced_type_counts(
    std::span<const std::uint64_t> below, std::span<const std::uint64_t> parts) {
  require(below.size() < 64, "type counting is limited to 63 elements");
  std::uint64_t covered = 0;
  for (std::uint64_t part : parts) {
    require(part != 0 && (covered & part) == 0,
            "parts must be nonempty and pairwise disjoint");
    covered |= part;
  }
  require(covered == full_mask(static_cast<int>(below.size())),
          "parts must cover every element");
  TypeCounter counter(below, parts);
  std::map<Composition, std::uint64_t> out;
  for (const auto& [type, c] : counter.count(0, parts.size()))
    out.emplace(Composition(type), c);
  return out;
}

std::map<Composition, std::uint64_t> induced_type_counts(const LabeledPoset& p,
                                                         const SetPartition& t) {
  require_partition_of_labels(p, t);
  std::vector<std::uint64_t> below;
  for (int i = 0; i < p.size(); ++i) below.push_back(p.below(i));
  std::vector<std::uint64_t> parts;
  for (const auto& block : t.blocks()) {
    std::uint64_t mask = 0;
    for (int x : block) mask |= bit(p.index_of(x));
    parts.push_back(mask);
  }
  return induced_type_counts(below, parts);
}

LabelingKind labeling_kind(const LabeledPoset& p) {
  bool strict = true;
  bool natural = true;
  for (int y = 0; y < p.size(); ++y)
    for (int x = 0; x < p.size(); ++x)
      if (p.below(y) & bit(x)) {
        // Indices follow label order.
        if (x < y) strict = false;
        if (x > y) natural = false;
      }
  if (strict && natural) return LabelingKind::Both;
  if (strict) return LabelingKind::Strict;
  if (natural) return LabelingKind::Natural;
  return LabelingKind::Neither;
}

ProductPoset nbasis_product_poset(const Composition& a, const Composition& b) {
  require(!a.empty() && !b.empty(), "product poset needs nonzero compositions");
  std::vector<Block> levels_a(a.length());
  std::vector<Block> levels_b(b.length());
  int next = 1;
  assign_levels(levels_a, a, 1, next);
  assign_levels(levels_b, b, 1, next);
  assign_levels(levels_a, a, 0, next);
  assign_levels(levels_b, b, 0, next);

  Block odd;
  Block even;
  for (const auto* levels : {&levels_a, &levels_b})
    for (std::size_t i = 0; i < levels->size(); ++i) {
      Block& target = i % 2 == 0 ? odd : even;
      target.insert(target.end(), (*levels)[i].begin(), (*levels)[i].end());
    }
  std::vector<Block> split;
  if (!odd.empty()) split.push_back(std::move(odd));
  if (!even.empty()) split.push_back(std::move(even));

  LabeledPoset pa = stacked_antichains(levels_a);
  LabeledPoset pb = stacked_antichains(levels_b);
  std::vector<int> labels = pa.labels();
  labels.insert(labels.end(), pb.labels().begin(), pb.labels().end());
  std::vector<std::pair<int, int>> relations = pa.covers();
  for (const auto& c : pb.covers()) relations.push_back(c);
  return {LabeledPoset(std::move(labels), relations), SetPartition(std::move(split))};
}

}  // namespace nqsym

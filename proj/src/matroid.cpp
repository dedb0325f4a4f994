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

#include "nqsym/matroid.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

#include "nqsym/error.hpp"
#include "nqsym/reductions.hpp"

namespace nqsym {

namespace {

Subset element_bit(int e) { return Subset{1} << (e - 1); }

Subset ground_mask(int n) { return n == 32 ? ~Subset{0} : (Subset{1} << n) - 1; }

// Keeps the bits of `s` that lie in `keep`, packed to the low end.
Subset compress(Subset s, Subset keep) {
  Subset out = 0;
  int position = 0;
  for (int i = 0; i < 32; ++i) {
    if (!(keep >> i & 1)) continue;
    if (s >> i & 1) out |= Subset{1} << position;
    ++position;
  }
  return out;
}

bool exchange_holds(std::span<const Subset> bases,
                    const std::function<bool(Subset)>& is_member) {
  for (Subset b1 : bases) {
    for (Subset b2 : bases) {
      const Subset only1 = b1 & ~b2;
      const Subset only2 = b2 & ~b1;
      for (Subset e = only1; e; e &= e - 1) {
        const Subset eb = e & -e;
        bool found = false;
        for (Subset f = only2; f && !found; f &= f - 1)
          found = is_member((b1 & ~eb) | (f & -f));
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace

Subset to_mask(std::span<const int> elements) {
  Subset s = 0;
  for (int e : elements) {
    require(e >= 1 && e <= 32, "ground set elements must lie in 1..32");
    s |= element_bit(e);
  }
  return s;
}

std::vector<int> to_elements(Subset s) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (s >> i & 1) out.push_back(i + 1);
  return out;
}

bool satisfies_exchange(std::span<const Subset> bases) {
  std::vector<Subset> sorted(bases.begin(), bases.end());
  std::sort(sorted.begin(), sorted.end());
  return exchange_holds(sorted, [&](Subset s) {
    return std::binary_search(sorted.begin(), sorted.end(), s);
  });
}

Matroid::Matroid(int n, std::vector<Subset> bases) : n_(n), bases_(std::move(bases)) {
  require(n >= 0 && n <= kMaxGroundSet,
          "ground set size must lie in 0.." + std::to_string(kMaxGroundSet));
  require(!bases_.empty(), "a matroid needs at least one basis");
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  rank_ = std::popcount(bases_.front());
  for (Subset b : bases_) {
    require((b & ~ground_mask(n)) == 0, "basis element outside the ground set");
    require(std::popcount(b) == rank_, "bases must all have the same size");
  }
  require(satisfies_exchange(bases_), "bases violate the exchange axiom");
}

Matroid Matroid::from_lists(int n, const std::vector<std::vector<int>>& bases) {
  std::vector<Subset> masks;
  for (const auto& b : bases) {
    for (int e : b)
      require(e >= 1 && e <= n, "basis element " + std::to_string(e) +
                                    " outside the ground set 1.." + std::to_string(n));
    Subset mask = to_mask(b);
    require(std::popcount(mask) == static_cast<int>(b.size()),
            "basis lists must not repeat elements");
    masks.push_back(mask);
  }
  return Matroid(n, std::move(masks));
}

std::vector<std::vector<int>> Matroid::basis_lists() const {
  std::vector<std::vector<int>> out;
  for (Subset b : bases_) out.push_back(to_elements(b));
  std::sort(out.begin(), out.end());
  return out;
}

bool Matroid::is_basis(Subset b) const {
  return std::binary_search(bases_.begin(), bases_.end(), b);
}

std::vector<int> Matroid::loops() const {
  Subset covered = 0;
  for (Subset b : bases_) covered |= b;
  return to_elements(ground_mask(n_) & ~covered);
}

std::vector<int> Matroid::coloops() const {
  Subset common = ground_mask(n_);
  for (Subset b : bases_) common &= b;
  return to_elements(common);
}

int Matroid::rank_of(Subset a) const {
  int best = 0;
  for (Subset b : bases_) best = std::max(best, std::popcount(b & a));
  return best;
}

Matroid uniform(int r, int n) {
  require(n >= 0 && n <= Matroid::kMaxGroundSet && r >= 0 && r <= n,
          "uniform matroid needs 0 <= r <= n");
  std::vector<Subset> bases;
  for (Subset s = 0; s <= ground_mask(n); ++s) {
    if (std::popcount(s) == r) bases.push_back(s);
    if (s == ground_mask(n)) break;
  }
  return Matroid(n, std::move(bases));
}

Matroid dual(const Matroid& m) {
  std::vector<Subset> bases;
  for (Subset b : m.bases()) bases.push_back(ground_mask(m.ground_size()) & ~b);
  return Matroid(m.ground_size(), std::move(bases));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.ground_size() + b.ground_size();
  require(n <= Matroid::kMaxGroundSet, "direct sum too large");
  std::vector<Subset> bases;
  for (Subset x : a.bases())
    for (Subset y : b.bases()) bases.push_back(x | (y << a.ground_size()));
  return Matroid(n, std::move(bases));
}

namespace {

Subset checked_subset(const Matroid& m, std::span<const int> a) {
  for (int e : a)
    require(e >= 1 && e <= m.ground_size(),
            "element " + std::to_string(e) + " outside the ground set");
  return to_mask(a);
}

}  // namespace

Matroid restriction(const Matroid& m, std::span<const int> a) {
  const Subset keep = checked_subset(m, a);
  const int r = m.rank_of(keep);
  std::vector<Subset> bases;
  for (Subset b : m.bases())
    if (std::popcount(b & keep) == r) bases.push_back(compress(b & keep, keep));
  return Matroid(std::popcount(keep), std::move(bases));
}

Matroid contraction(const Matroid& m, std::span<const int> a) {
  const Subset removed = checked_subset(m, a);
  const Subset keep = ground_mask(m.ground_size()) & ~removed;
  const int r = m.rank_of(removed);
  std::vector<Subset> bases;
  for (Subset b : m.bases())
    if (std::popcount(b & removed) == r) bases.push_back(compress(b & keep, keep));
  return Matroid(std::popcount(keep), std::move(bases));
}

std::vector<std::vector<int>> components(const Matroid& m) {
  // Fundamental circuits of one basis already connect every component.
  const int n = m.ground_size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent.at(static_cast<std::size_t>(x)) != x) x = parent.at(static_cast<std::size_t>(x));
    return x;
  };
  const Subset b = m.bases().front();
  for (int e = 1; e <= n; ++e) {
    if (b & element_bit(e)) continue;
    for (int f = 1; f <= n; ++f)
      if ((b & element_bit(f)) && m.is_basis((b & ~element_bit(f)) | element_bit(e)))
        parent.at(static_cast<std::size_t>(find(e - 1))) = find(f - 1);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int e = 0; e < n; ++e) {
    const int root = find(e);
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(e + 1);
  }
  return out;
}

std::vector<std::vector<int>> circuits(const Matroid& m) {
  const int n = m.ground_size();
  require(n <= 16, "circuit enumeration is limited to 16 elements");
  auto independent = [&](Subset s) {
    for (Subset b : m.bases())
      if ((s & ~b) == 0) return true;
    return false;
  };
  std::vector<std::vector<int>> out;
  for (Subset s = 1; s <= ground_mask(n); ++s) {
    if (!independent(s)) {
      bool minimal = true;
      for (Subset e = s; e && minimal; e &= e - 1)
        minimal = independent(s & ~(e & -e));
      if (minimal) out.push_back(to_elements(s));
    }
    if (s == ground_mask(n)) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Block> interval_blocks(const Composition& parts) {
  std::vector<Block> out;
  int next = 1;
  for (int p : parts) {
    Block b;
    for (int i = 0; i < p; ++i) b.push_back(next++);
    out.push_back(std::move(b));
  }
  return out;
}

Matroid rank2_from_blocks(int n, const std::vector<Block>& blocks) {
  require(blocks.size() >= 2, "rank two matroids need at least two blocks");
  std::vector<Subset> masks;
  Subset seen = 0;
  for (const auto& block : blocks) {
    require(!block.empty(), "blocks must be nonempty");
    for (int e : block) require(e >= 1 && e <= n, "block element outside the ground set");
    Subset mask = to_mask(block);
    require((mask & seen) == 0 && std::popcount(mask) == static_cast<int>(block.size()),
            "blocks must be disjoint");
    seen |= mask;
    masks.push_back(mask);
  }
  std::vector<Subset> bases;
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      for (Subset x = masks[i]; x; x &= x - 1)
        for (Subset y = masks[j]; y; y &= y - 1) bases.push_back((x & -x) | (y & -y));
  return Matroid(n, std::move(bases));
}

Matroid rank2_from_partition(const Composition& lambda) {
  require(is_partition(lambda) && lambda.length() >= 2,
          "rank two classes are indexed by partitions with at least two parts");
  return rank2_from_blocks(lambda.weight(), interval_blocks(lambda));
}

namespace {

// Strict labels: cobase elements 1..n-r, base elements n-r+1..n.
std::vector<int> strict_labels(const Matroid& m, Subset b) {
  const int n = m.ground_size();
  std::vector<int> label(static_cast<std::size_t>(n) + 1);
  int low = 1;
  int high = n - m.rank() + 1;
  for (int e = 1; e <= n; ++e) label[static_cast<std::size_t>(e)] = (b & element_bit(e)) ? high++ : low++;
  return label;
}

void require_basis(const Matroid& m, Subset b) {
  require(m.is_basis(b), "set " + std::to_string(b) + " is not a basis");
}

}  // namespace

LabeledPoset base_poset(const Matroid& m, Subset b) {
  require_basis(m, b);
  const int n = m.ground_size();
  auto label = strict_labels(m, b);
  std::vector<int> labels(label.begin() + 1, label.end());
  std::vector<std::pair<int, int>> relations;
  for (int e = 1; e <= n; ++e) {
    if (!(b & element_bit(e))) continue;
    for (int f = 1; f <= n; ++f)
      if (!(b & element_bit(f)) && m.is_basis((b & ~element_bit(e)) | element_bit(f)))
        relations.emplace_back(label[static_cast<std::size_t>(e)], label[static_cast<std::size_t>(f)]);
  }
  return LabeledPoset(std::move(labels), relations);
}

QSymElement qsym_of_matroid(const Matroid& m) {
  const int n = m.ground_size();
  QSymElement out(Basis::N);
  std::vector<std::uint64_t> below(static_cast<std::size_t>(n));
  for (Subset b : m.bases()) {
    // Element e-1 of the order sits below f-1 when B - e + f is a basis.
    std::uint64_t minimal = b;
    for (int f = 1; f <= n; ++f) {
      std::uint64_t lower = 0;
      if (!(b & element_bit(f)))
        for (int e = 1; e <= n; ++e)
          if ((b & element_bit(e)) && m.is_basis((b & ~element_bit(e)) | element_bit(f)))
            lower |= element_bit(e);
      below[static_cast<std::size_t>(f - 1)] = lower;
      // An isolated cobase element can carry a high label as well, so it
      // joins the minimal side.
      if (lower == 0) minimal |= element_bit(f);
    }
    std::vector<std::uint64_t> parts{minimal};
    const std::uint64_t rest = ground_mask(n) & ~minimal;
    if (rest) parts.push_back(rest);
    if (n == 0) parts.clear();
    for (const auto& [type, count] : induced_type_counts(below, parts))
      out.add_term(type, Rational(Integer(static_cast<unsigned long>(count))));
  }
  return out;
}

QSymElement qsym_of_matroid_by_enumeration(const Matroid& m,
                                           EnumerationOptions options) {
  QSymElement out(Basis::Fundamental);
  for (Subset b : m.bases()) out += qsym_of_poset(base_poset(m, b), options);
  return convert(out, Basis::N);
}

int loops_coloops_from_qsym(const QSymElement& q) {
  int best = 0;
  for (const auto& a : supp(q))
    if (a.length() % 2 == 1) best = std::max(best, a.back());
  return best;
}

std::uint64_t missing_exchange_count(const Matroid& m) {
  std::uint64_t count = 0;
  const int n = m.ground_size();
  for (Subset b : m.bases())
    for (int e = 1; e <= n; ++e)
      for (int f = 1; f <= n; ++f)
        if ((b & element_bit(e)) && !(b & element_bit(f)) &&
            !m.is_basis((b & ~element_bit(e)) | element_bit(f)))
          ++count;
  return count;
}

int polytope_dim(const Matroid& m) {
  return m.ground_size() - static_cast<int>(components(m).size());
}

bool polytope_edge(const Matroid& m, Subset b1, Subset b2) {
  require_basis(m, b1);
  require_basis(m, b2);
  return std::popcount(b1 ^ b2) == 2;
}

Matroid random_matroid(int n, int r, std::mt19937_64& rng, bool loopless) {
  require(n >= 1 && n <= 12 && r >= 0 && r <= n, "random matroids need 0 <= r <= n <= 12");
  std::vector<Subset> bases = uniform(r, n).bases();
  std::vector<char> member(std::size_t{1} << n, 0);
  for (Subset b : bases) member[b] = 1;
  std::shuffle(bases.begin(), bases.end(), rng);
  // Stop after a random number of deletions so sizes vary.
  std::uniform_int_distribution<std::size_t> budget_dist(0, bases.size());
  std::size_t budget = budget_dist(rng);
  std::vector<Subset> current = bases;
  for (Subset candidate : bases) {
    if (budget == 0 || current.size() == 1) break;
    member[candidate] = 0;
    std::vector<Subset> trial;
    Subset covered = 0;
    for (Subset b : current)
      if (b != candidate) {
        trial.push_back(b);
        covered |= b;
      }
    bool ok = (!loopless || covered == ground_mask(n)) &&
              exchange_holds(trial, [&](Subset s) { return member[s] != 0; });
    if (ok) {
      current = std::move(trial);
      --budget;
    } else {
      member[candidate] = 1;
    }
  }
  return Matroid(n, std::move(current));
}

QSymElement reversed(const QSymElement& q) {
  QSymElement out(q.basis());
  for (const auto& [a, c] : q.terms()) out.add_term(reversal(a), c);
  return out;
}

DualityReport duality_check(const Matroid& m) {
  DualityReport report;
  const QSymElement f = qsym_of_matroid(m);
  const QSymElement fd = qsym_of_matroid(dual(m));
  report.monomial_form =
      convert(fd, Basis::Monomial) == reversed(convert(f, Basis::Monomial));
  report.n_form_applies = m.loops().empty() && m.coloops().empty();
  report.n_form = fd == reversed(f);
  const int c = static_cast<int>(m.coloops().size());
  report.grading = in_Vnr(fd, m.ground_size(), m.ground_size() - m.rank() + c);
  return report;
}

}  // namespace nqsym

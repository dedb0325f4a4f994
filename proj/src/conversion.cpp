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

#include "nqsym/conversion.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "nqsym/error.hpp"
#include "nqsym/permutation.hpp"

namespace nqsym {

namespace {

// Largest degree for which N-basis tables are built; the back-substitution
// touches 4^(n-1) coefficient pairs.
constexpr int kMaxNBasisDegree = 14;

using SparseRow = std::vector<std::pair<std::uint64_t, Integer>>;

// Number of permutations of [k] with each descent set, indexed by mask.
std::vector<Integer> descent_set_counts(int k) {
  const std::uint64_t size = std::uint64_t{1} << (k - 1);
  std::vector<Integer> factorial(static_cast<std::size_t>(k) + 1, 1);
  for (int i = 1; i <= k; ++i) factorial[static_cast<std::size_t>(i)] = factorial[static_cast<std::size_t>(i) - 1] * i;
  // Permutations whose descent set lies inside S: a multinomial coefficient.
  std::vector<Integer> at_most(size);
  for (std::uint64_t s = 0; s < size; ++s) {
    Integer value = factorial[static_cast<std::size_t>(k)];
    for (int part : from_subset_mask(s, k)) value /= factorial[static_cast<std::size_t>(part)];
    at_most[s] = value;
  }
  std::vector<Integer> exact(size);
  for (std::uint64_t d = 0; d < size; ++d) {
    Integer total = 0;
    const int d_size = std::popcount(d);
    for (std::uint64_t s = d;; s = (s - 1) & d) {
      if ((d_size - std::popcount(s)) % 2 == 0)
        total += at_most[s];
      else
        total -= at_most[s];
      if (s == 0) break;
    }
    exact[d] = total;
  }
  return exact;
}

// L-expansion of N_a as descent masks. P_a is a stack of antichains whose
// labels alternate high/low between levels, so a linear extension is a
// word per level; descents inside a level follow that word, and the seam
// after an odd-numbered level is always a descent, after an even one never.
SparseRow n_to_l_row(const Composition& a,
                     std::map<int, std::vector<Integer>>& descent_counts) {
  SparseRow current{{0, Integer(1)}};
  int offset = 0;
  for (std::size_t i = 0; i < a.length(); ++i) {
    const int k = a[i];
    auto& dist = descent_counts.try_emplace(k, std::vector<Integer>{}).first->second;
    if (dist.empty()) dist = descent_set_counts(k);
    std::uint64_t seam = 0;
    if (i > 0 && (i - 1) % 2 == 0) seam = std::uint64_t{1} << (offset - 1);
    SparseRow next;
    for (const auto& [mask, c] : current)
      for (std::uint64_t d = 0; d < dist.size(); ++d)
        if (dist[d] != 0) next.emplace_back(mask | seam | (d << offset), c * dist[d]);
    current = std::move(next);
    offset += k;
  }
  return current;
}

struct DegreeTables {
  int n = 0;
  std::vector<SparseRow> n_to_l;  // by mask of a: N_a in L
  std::vector<SparseRow> l_to_n;  // by mask of b: L_b in N
};

std::shared_ptr<const DegreeTables> build_tables(int n) {
  auto tables = std::make_shared<DegreeTables>();
  tables->n = n;
  const std::uint64_t size = std::uint64_t{1} << (n - 1);
  tables->n_to_l.resize(size);
  tables->l_to_n.resize(size);
  std::map<int, std::vector<Integer>> descent_counts;
  for (std::uint64_t m = 0; m < size; ++m)
    tables->n_to_l[m] = n_to_l_row(from_subset_mask(m, n), descent_counts);

  // N_a = L_{runs_from_rho(a)} + (terms L_{runs_from_rho(c)} with c strictly
  // finer than a). Lexicographic order puts finer compositions first, so
  // every L_g needed on the right is already expressed in N.
  std::vector<bool> done(size, false);
  std::vector<Integer> acc(size);
  for (const Composition& a : compositions_of(n, CompositionOrder::Lexicographic)) {
    const std::uint64_t a_mask = subset_mask(a);
    const std::uint64_t lead = subset_mask(runs_from_rho(a));
    for (auto& x : acc) x = 0;
    acc[a_mask] = 1;
    bool found_lead = false;
    for (const auto& [g, c] : tables->n_to_l[a_mask]) {
      if (g == lead) {
        if (c != 1) fail(ErrorKind::Inconsistent, "N-basis leading coefficient is not 1");
        found_lead = true;
        continue;
      }
      if (!done[g])
        fail(ErrorKind::Inconsistent,
             "N-basis expansion is not triangular at " + a.to_string());
      for (const auto& [t, v] : tables->l_to_n[g]) acc[t] -= c * v;
    }
    if (!found_lead)
      fail(ErrorKind::Inconsistent, "N-basis expansion lacks its leading term");
    SparseRow row;
    for (std::uint64_t t = 0; t < size; ++t)
      if (acc[t] != 0) row.emplace_back(t, acc[t]);
    tables->l_to_n[lead] = std::move(row);
    done[lead] = true;
  }
  return tables;
}

// Write-once memo of the per-degree tables.
std::shared_ptr<const DegreeTables> tables_for(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const DegreeTables>> cache;
  if (n > kMaxNBasisDegree)
    fail(ErrorKind::ResourceLimit, "N-basis conversions are limited to degree " +
                                       std::to_string(kMaxNBasisDegree));
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto built = build_tables(n);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.try_emplace(n, std::move(built)).first->second;
}

QSymElement from_row(Basis basis, const SparseRow& row, int n) {
  QSymElement out(basis);
  for (const auto& [mask, c] : row) out.add_term(from_subset_mask(mask, n), Rational(c));
  return out;
}

// Sum over the refinements of a (supersets of its subset), optionally with
// the Moebius sign of the refinement order.
QSymElement refinement_sum(const Composition& a, Basis target, bool signed_sum) {
  const int n = a.weight();
  const std::uint64_t base = subset_mask(a);
  const std::uint64_t free = ((std::uint64_t{1} << (n - 1)) - 1) & ~base;
  QSymElement out(target);
  for (std::uint64_t extra = free;; extra = (extra - 1) & free) {
    Rational c = signed_sum && std::popcount(extra) % 2 == 1 ? -1 : 1;
    out.add_term(from_subset_mask(base | extra, n), c);
    if (extra == 0) break;
  }
  return out;
}

}  // namespace

QSymElement n_basis_element(const Composition& a) {
  if (a.empty()) return QSymElement::scalar(1, Basis::Fundamental);
  const int n = a.weight();
  require(n <= 62, "composition weight too large for the N basis");
  std::map<int, std::vector<Integer>> descent_counts;
  return from_row(Basis::Fundamental, n_to_l_row(a, descent_counts), n);
}

QSymElement expand_basis_element(Basis source, const Composition& a,
                                 Basis target) {
  if (a.empty() || source == target) return QSymElement::basis_element(target, a);
  const int n = a.weight();
  switch (source) {
    case Basis::Monomial:
      if (target == Basis::Fundamental) return refinement_sum(a, target, true);
      return convert(refinement_sum(a, Basis::Fundamental, true), Basis::N);
    case Basis::Fundamental:
      if (target == Basis::Monomial) return refinement_sum(a, target, false);
      return from_row(Basis::N, tables_for(n)->l_to_n[subset_mask(a)], n);
    case Basis::N: {
      QSymElement in_l =
          from_row(Basis::Fundamental, tables_for(n)->n_to_l[subset_mask(a)], n);
      return target == Basis::Fundamental ? in_l : convert(in_l, target);
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown basis");
}

QSymElement convert(const QSymElement& q, Basis target) {
  if (q.basis() == target) return q;
  QSymElement out(target);
  for (const auto& [a, c] : q.terms()) {
    for (const auto& [b, d] : expand_basis_element(q.basis(), a, target).terms())
      out.add_term(b, c * d);
  }
  return out;
}

TransitionMatrix transition_matrix(int n, Basis from, Basis to,
                                   CompositionOrder order) {
  require(n >= 1, "transition matrices need degree at least 1");
  TransitionMatrix m{n, from, to, compositions_of(n, order), {}};
  std::map<Composition, std::size_t> position;
  for (std::size_t j = 0; j < m.index.size(); ++j) position[m.index[j]] = j;
  for (const auto& a : m.index) {
    std::vector<Rational> row(m.index.size());
    for (const auto& [b, c] : expand_basis_element(from, a, to).terms())
      row[position.at(b)] = c;
    m.entries.push_back(std::move(row));
  }
  return m;
}

TransitionMatrix rho_indexed_n_to_l(int n, CompositionOrder order) {
  TransitionMatrix plain = transition_matrix(n, Basis::N, Basis::Fundamental, order);
  std::map<Composition, std::size_t> position;
  for (std::size_t j = 0; j < plain.index.size(); ++j) position[plain.index[j]] = j;
  TransitionMatrix m = plain;
  for (std::size_t i = 0; i < m.index.size(); ++i)
    for (std::size_t j = 0; j < m.index.size(); ++j)
      m.entries[i][j] = plain.entries[i][position.at(runs_from_rho(m.index[j]))];
  return m;
}

bool is_upper_unitriangular(const TransitionMatrix& m) {
  for (std::size_t i = 0; i < m.entries.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (m.entries[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

bool is_lower_unitriangular(const TransitionMatrix& m) {
  for (std::size_t i = 0; i < m.entries.size(); ++i)
    for (std::size_t j = i; j < m.entries.size(); ++j)
      if (m.entries[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

bool is_integral(const TransitionMatrix& m) {
  for (const auto& row : m.entries)
    for (const auto& x : row)
      if (!is_integer(x)) return false;
  return true;
}

TransitionMatrix compose(const TransitionMatrix& first,
                         const TransitionMatrix& second) {
  require(first.index == second.index && first.to == second.from,
          "matrices do not compose");
  TransitionMatrix out{first.n, first.from, second.to, first.index, {}};
  const std::size_t size = first.index.size();
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<Rational> row(size);
    for (std::size_t j = 0; j < size; ++j) {
      if (first.entries[i][j] == 0) continue;
      for (std::size_t k = 0; k < size; ++k)
        if (second.entries[j][k] != 0) row[k] += first.entries[i][j] * second.entries[j][k];
    }
    out.entries.push_back(std::move(row));
  }
  return out;
}

bool is_identity(const TransitionMatrix& m) {
  for (std::size_t i = 0; i < m.entries.size(); ++i)
    for (std::size_t j = 0; j < m.entries.size(); ++j)
      if (m.entries[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

bool order_extends_refinement(int n, CompositionOrder order) {
  auto index = compositions_of(n, order);
  for (std::size_t i = 0; i < index.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (refines(index[i], index[j])) return false;  // finer placed later
  return true;
}

}  // namespace nqsym

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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nqsym/conversion.hpp"
#include "nqsym/error.hpp"
#include "nqsym/poset.hpp"
#include "nqsym/product.hpp"
#include "nqsym/set_partition.hpp"
#include "oracle.hpp"

using namespace nqsym;

namespace {

Composition C(const char* s) { return Composition::parse(s); }
Permutation P(const char* s) { return Permutation::parse(s); }

// Random labeled poset on a shuffled label set, relations oriented by a
// hidden linear order so the result is acyclic.
LabeledPoset random_poset(int n, std::mt19937_64& rng) {
  std::vector<int> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(i);
  std::shuffle(labels.begin(), labels.end(), rng);
  std::vector<std::pair<int, int>> relations;
  std::bernoulli_distribution edge(0.35);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) relations.emplace_back(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]);
  std::sort(labels.begin(), labels.end());
  return LabeledPoset(labels, relations);
}

QSymElement sum_over_fibre(const OrderedPartition& k) {
  QSymElement out(Basis::Fundamental);
  for (const auto& p : fibre(k)) out.add_term(runs(p), 1);
  return out;
}

}  // namespace

TEST_CASE("linear extensions") {
  const std::vector<Permutation> expected{P("31245"), P("31254"), P("32145"), P("32154")};
  CHECK(linear_extensions(build_p_alpha(C("122"))) == expected);
  CHECK(linear_extensions(LabeledPoset::antichain({1, 2, 3})).size() == 6);
  const LabeledPoset chain({1, 2, 3}, {{1, 2}, {2, 3}});
  CHECK(linear_extensions(chain) == std::vector<Permutation>{P("123")});
  CHECK(qsym_of_poset(chain) == QSymElement::basis_element(Basis::Fundamental, C("3")));
}

TEST_CASE("poset validation and limits") {
  CHECK_THROWS_AS(LabeledPoset({1, 2}, {{1, 2}, {2, 1}}), Error);
  CHECK_THROWS_AS(LabeledPoset({1, 1}, {}), Error);
  std::vector<int> labels;
  for (int i = 1; i <= 13; ++i) labels.push_back(i);
  try {
    linear_extensions(LabeledPoset::antichain(labels));
    FAIL("expected a resource limit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
}

TEST_CASE("F(P_122) is the worked example") {
  QSymElement expected(Basis::Fundamental);
  for (const char* c : {"14", "131", "113", "1121"}) expected.add_term(C(c), 1);
  CHECK(qsym_of_poset(build_p_alpha(C("122"))) == expected);
}

TEST_CASE("P_alpha shapes") {
  CHECK(p_alpha_antichains(C("122")) == std::vector<Block>{{3}, {1, 2}, {4, 5}});
  CHECK(build_p_alpha(C("122")) ==
        ordinal_sum(ordinal_sum(LabeledPoset::antichain({3}), LabeledPoset::antichain({1, 2})),
                    LabeledPoset::antichain({4, 5})));
  CHECK(build_p_alpha(C("4")) == LabeledPoset::antichain({1, 2, 3, 4}));
  CHECK(build_p_alpha(C("11")) == LabeledPoset({1, 2}, {{2, 1}}));
}

TEST_CASE("ordinal and disjoint sums") {
  const LabeledPoset two = ordinal_sum(LabeledPoset::antichain({1}), LabeledPoset::antichain({2}));
  CHECK(two == LabeledPoset({1, 2}, {{1, 2}}));
  const LabeledPoset p = build_p_alpha(C("21"));
  CHECK(qsym_of_poset(disjoint_sum_relabeled(p, LabeledPoset())) == qsym_of_poset(p));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const LabeledPoset a = random_poset(1 + static_cast<int>(rng() % 4), rng);
    const LabeledPoset b = random_poset(1 + static_cast<int>(rng() % 4), rng);
    CHECK(convert(qsym_of_poset(disjoint_sum_relabeled(a, b)), Basis::Monomial) ==
          mul(convert(qsym_of_poset(a), Basis::Monomial), convert(qsym_of_poset(b), Basis::Monomial)));
  }
}

TEST_CASE("F(P) against P-partition counts") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const LabeledPoset p = random_poset(1 + static_cast<int>(rng() % 6), rng);
    CHECK(convert(qsym_of_poset(p), Basis::Monomial) == oracle::p_partition_expansion(p));
  }
}

TEST_CASE("posets of ordered partitions") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> v{1, 2, 3, 4, 5, 6};
    std::shuffle(v.begin(), v.end(), rng);
    const auto all = compositions_of(6);
    const OrderedPartition k = induced_partition_by_type(Permutation(v), all[rng() % all.size()]);
    CHECK(qsym_of_poset(build_p_k(k)) == sum_over_fibre(k));
    if (is_alternating(k)) CHECK(qsym_of_poset(build_p_k(k)) == n_basis_element(k.type()));
  }
  CHECK(build_p_k(OrderedPartition({{1, 2, 3}})) == LabeledPoset::antichain({1, 2, 3}));
  const OrderedPartition alt({{4, 5}, {1}, {2, 3}});
  REQUIRE(is_alternating(alt));
  CHECK(qsym_of_poset(build_p_k(alt)) == n_basis_element(C("212")));
}

TEST_CASE("decomposition by an antichain-inducing partition") {
  const LabeledPoset p = build_p_alpha(C("122"));
  // 3 < 1 can share a block under {{1,2,3},{4,5}}, so that one does not qualify.
  CHECK_FALSE(is_antichain_inducing(p, SetPartition({{1, 2, 3}, {4, 5}})));
  const SetPartition t({{3, 4, 5}, {1, 2}});
  CHECK(is_antichain_inducing(p, t));
  QSymElement sum(Basis::Fundamental);
  for (const auto& k : decompose_by(p, t)) sum += qsym_of_poset(build_p_k(k));
  CHECK(sum == qsym_of_poset(p));

  const SetPartition singletons({{1}, {2}, {3}, {4}, {5}});
  CHECK(decompose_by(p, singletons).size() == linear_extensions(p).size());
  CHECK(decompose_by(LabeledPoset::antichain({1, 2, 3}), SetPartition({{1, 2, 3}})).size() == 1);
  CHECK_FALSE(is_antichain_inducing(LabeledPoset({1, 2}, {{1, 2}}), SetPartition({{1, 2}})));
}

TEST_CASE("type counts match enumeration") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const LabeledPoset p = random_poset(2 + static_cast<int>(rng() % 5), rng);
    std::vector<Block> blocks(2);
    for (int x : p.labels()) blocks[rng() % 2].push_back(x);
    std::erase_if(blocks, [](const Block& b) { return b.empty(); });
    const SetPartition t(blocks);
    if (!is_antichain_inducing(p, t)) continue;
    std::map<Composition, std::uint64_t> counted;
    for (const auto& k : decompose_by(p, t)) ++counted[k.type()];
    CHECK(induced_type_counts(p, t) == counted);
  }
}

TEST_CASE("labeling kinds") {
  CHECK(labeling_kind(LabeledPoset({1, 2}, {{2, 1}})) == LabelingKind::Strict);
  CHECK(labeling_kind(LabeledPoset({1, 2}, {{1, 2}})) == LabelingKind::Natural);
  CHECK(labeling_kind(LabeledPoset::antichain({1, 2})) == LabelingKind::Both);
  CHECK(labeling_kind(LabeledPoset({1, 2, 3}, {{1, 2}, {3, 2}})) == LabelingKind::Neither);
}

TEST_CASE("product posets") {
  ProductPoset q = nbasis_product_poset(C("1"), C("1"));
  CHECK(q.poset == LabeledPoset::antichain({1, 2}));
  CHECK(decompose_by(q.poset, q.split) == std::vector<OrderedPartition>{OrderedPartition({{1, 2}})});

  q = nbasis_product_poset(C("1"), C("11"));
  std::set<OrderedPartition> got;
  for (const auto& k : decompose_by(q.poset, q.split)) got.insert(k);
  CHECK(got == std::set<OrderedPartition>{OrderedPartition({{2, 3}, {1}}),
                                          OrderedPartition({{3}, {1}, {2}})});

  for (int total = 2; total <= 8; ++total)
    for (int i = 1; i < total; ++i)
      for (const auto& a : compositions_of(i))
        for (const auto& b : compositions_of(total - i)) {
          const ProductPoset pq = nbasis_product_poset(a, b);
          REQUIRE(is_antichain_inducing(pq.poset, pq.split));
          for (const auto& k : decompose_by(pq.poset, pq.split)) REQUIRE(is_alternating(k));
        }
}

TEST_CASE("structure constants by enumeration and by counting agree") {
  for (int total = 2; total <= 7; ++total)
    for (int i = 1; i < total; ++i)
      for (const auto& a : compositions_of(i))
        for (const auto& b : compositions_of(total - i))
          CHECK(structure_constants(a, b) == structure_constants_by_enumeration(a, b));
}

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

#include <random>

#include "frozen_values.hpp"
#include "nqsym/conversion.hpp"
#include "nqsym/error.hpp"
#include "nqsym/linalg.hpp"
#include "nqsym/product.hpp"
#include "nqsym/qsym.hpp"
#include "nqsym/reductions.hpp"
#include "oracle.hpp"

using namespace nqsym;

namespace {

Composition C(const char* s) { return Composition::parse(s); }
QSymElement x(const char* s) { return QSymElement::basis_element(Basis::Monomial, C(s)); }
QSymElement L(const char* s) { return QSymElement::basis_element(Basis::Fundamental, C(s)); }
QSymElement N(const char* s) { return QSymElement::basis_element(Basis::N, C(s)); }

QSymElement from_terms(Basis basis, const std::vector<frozen::Term>& terms) {
  QSymElement out(basis);
  for (const auto& t : terms) out.add_term(Composition(t.comp), Rational(t.num, t.den));
  return out;
}

}  // namespace

TEST_CASE("elements") {
  QSymElement q(Basis::N);
  q.add_term(C("21"), 3);
  q.add_term(C("111"), Rational(1, 2));
  q.add_term(C("21"), -3);
  CHECK(q.term_count() == 1);
  CHECK(q.to_string() == "1/2*N[111]");
  CHECK((N("2") + N("11")).to_string() == "N[2] + N[11]");
  CHECK_FALSE(q.is_integral());
  CHECK(N("1").degree() == 1);
  CHECK_FALSE((N("1") + N("11")).degree().has_value());
  CHECK(parse_basis("L") == Basis::Fundamental);
  CHECK_THROWS_AS(parse_basis("Q"), Error);
}

TEST_CASE("N basis elements") {
  CHECK(n_basis_element(C("122")) == L("14") + L("131") + L("113") + L("1121"));
  CHECK(n_basis_element(C("11")) == L("11"));
  CHECK(n_basis_element(Composition{}) == QSymElement::scalar(1, Basis::Fundamental));
  for (const auto& e : frozen::kNInL)
    CHECK(n_basis_element(Composition(e.key)) == from_terms(Basis::Fundamental, e.terms));
}

TEST_CASE("N_(n) sums all permutations") {
  for (int n = 1; n <= 6; ++n) {
    QSymElement expected(Basis::Fundamental);
    std::vector<int> v;
    for (int i = 1; i <= n; ++i) v.push_back(i);
    do {
      expected.add_term(runs(Permutation(v)), 1);
    } while (std::next_permutation(v.begin(), v.end()));
    CHECK(n_basis_element(Composition{n}) == expected);
  }
}

TEST_CASE("basis conversion") {
  CHECK(convert(L("1"), Basis::Monomial) == x("1"));
  CHECK(convert(N("2"), Basis::Monomial) == x("2") + Rational(2) * x("11"));
  CHECK(convert(L("21"), Basis::Monomial) == x("21") + x("111"));
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const QSymElement q = oracle::random_element(8, rng, Basis::N);
    CHECK(convert(convert(q, Basis::Monomial), Basis::N) == q);
    CHECK(convert(convert(q, Basis::Fundamental), Basis::N) == q);
    const QSymElement m = oracle::random_element(8, rng);
    CHECK(convert(convert(m, Basis::Monomial), Basis::Fundamental) == convert(m, Basis::Fundamental));
    CHECK(convert(convert(m, Basis::Fundamental), Basis::Monomial) == m);
  }
}

TEST_CASE("mixed bases add in the monomial basis") {
  const QSymElement sum = N("2") + L("11");
  CHECK(sum.basis() == Basis::Monomial);
  CHECK(sum == x("2") + Rational(3) * x("11"));
}

TEST_CASE("transition matrices") {
  const TransitionMatrix m = transition_matrix(2, Basis::N, Basis::Fundamental);
  CHECK(m.index == std::vector<Composition>{C("2"), C("11")});
  CHECK(m.entries == RationalMatrix{{1, 1}, {0, 1}});
  for (int n = 1; n <= 8; ++n) {
    const TransitionMatrix t = transition_matrix(n, Basis::N, Basis::Fundamental);
    CHECK(t.index.size() == (std::size_t{1} << (n - 1)));
    const Rational det = determinant(t.entries);
    CHECK((det == 1 || det == -1));
    CHECK(is_integral(transition_matrix(n, Basis::Fundamental, Basis::N)));
    CHECK(is_lower_unitriangular(rho_indexed_n_to_l(n, CompositionOrder::Lexicographic)));
  }
  CHECK(order_extends_refinement(6, CompositionOrder::Lexicographic));
  CHECK_FALSE(order_extends_refinement(3, CompositionOrder::BinaryWord));
}

TEST_CASE("products") {
  CHECK(mul(x("1"), x("11")) == Rational(3) * x("111") + x("21") + x("12"));
  CHECK(mul(QSymElement::scalar(1), x("21")) == x("21"));
  CHECK(mul(N("1"), N("1")) == N("2"));
  CHECK(mul(N("1"), N("11")) == N("21") + N("111"));
  CHECK(mul_nbasis(C("1"), C("11")) == N("21") + N("111"));
  for (const auto& e : frozen::kNProducts) {
    const auto zero = std::find(e.key.begin(), e.key.end(), 0);
    const Composition a(std::vector<int>(e.key.begin(), zero));
    const Composition b(std::vector<int>(zero + 1, e.key.end()));
    CHECK(mul_nbasis(a, b) == from_terms(Basis::N, e.terms));
  }
}

TEST_CASE("products against evaluation at points") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const QSymElement p = oracle::random_element(3, rng, Basis::N);
    const QSymElement q = oracle::random_element(3, rng, Basis::Fundamental);
    const QSymElement product = convert(mul(p, q), Basis::Monomial);
    std::vector<Rational> point;
    for (int i = 0; i < 6; ++i) point.push_back(coord(rng));
    CHECK(oracle::evaluate(product, point) ==
          oracle::evaluate(convert(p, Basis::Monomial), point) *
              oracle::evaluate(convert(q, Basis::Monomial), point));
  }
}

TEST_CASE("coproduct") {
  Tensor expected;
  expected.add_term(C("11"), Composition{}, 1);
  expected.add_term(C("1"), C("1"), 1);
  expected.add_term(Composition{}, C("11"), 1);
  CHECK(coproduct_monomial(x("11")) == expected);
  Tensor unit;
  unit.add_term(Composition{}, Composition{}, 1);
  CHECK(coproduct_monomial(QSymElement::scalar(1)) == unit);
  const Tensor in_n = convert(coproduct_monomial(N("11")), Basis::N);
  CHECK(in_n.coefficient(C("1"), C("1")) != 0);
}

TEST_CASE("support and graded pieces") {
  CHECK(supp(QSymElement::basis_element(Basis::N, C("32"), 10)) == CompositionSet{C("32")});
  CHECK(supp(QSymElement(Basis::N)).empty());
  CHECK(supp(N("122")) == CompositionSet{C("122")});
  CHECK(in_Vnr(N("122"), 5, 3));
  CHECK_FALSE(in_Vnr(N("122"), 5, 2));
  for (int n = 1; n <= 10; ++n) {
    std::size_t total = 0;
    for (int r = 1; r <= n; ++r) {
      const std::size_t dim = compositions_of_rank(n, r).size();
      Integer expected;
      mpz_bin_uiui(expected.get_mpz_t(), static_cast<unsigned long>(n - 1), static_cast<unsigned long>(r - 1));
      CHECK(Integer(static_cast<unsigned long>(dim)) == expected);
      total += dim;
    }
    CHECK(total == (std::size_t{1} << (n - 1)));
  }
}

TEST_CASE("quotient and division") {
  CHECK(quotient_J_project(N("1")).is_zero());
  CHECK(quotient_J_project(N("211") + N("22")) == N("22"));
  CHECK(divide_by_pure_power(N("2"), 1) == N("1"));
  try {
    divide_by_pure_power(N("11"), 1);
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDivisible);
  }
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    QSymElement q = oracle::random_element(4, rng, Basis::N);
    const int d = *q.degrees().rbegin();
    q = q.homogeneous_component(d);
    const int s = 1 + static_cast<int>(rng() % 3);
    const QSymElement product = mul(QSymElement::basis_element(Basis::N, Composition{s}), q);
    CHECK(divide_by_pure_power(product, s) == q);
  }
}

TEST_CASE("linear algebra") {
  CHECK(determinant({{2, 1}, {1, 1}}) == 1);
  CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
  const LinearSolution s = solve_columns({{{0, 1}}, {{0, 1}, {1, 1}}}, {{0, 3}, {1, 1}});
  CHECK(s.consistent);
  CHECK(s.unique);
  CHECK(s.x == std::vector<Rational>{2, 1});
  CHECK_FALSE(solve_columns({{{0, 1}}}, {{1, 1}}).consistent);
}

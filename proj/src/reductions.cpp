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

#include "nqsym/reductions.hpp"

#include <map>
#include <string>

#include "nqsym/error.hpp"
#include "nqsym/linalg.hpp"
#include "nqsym/product.hpp"

namespace nqsym {

CompositionSet supp(const QSymElement& q) {
  CompositionSet out;
  for (const auto& [a, c] : convert(q, Basis::N).terms()) out.insert(a);
  return out;
}

bool in_Vnr(const QSymElement& q, int n, int r) {
  for (const auto& a : supp(q))
    if (a.weight() != n || rank(a) != r) return false;
  return true;
}

QSymElement quotient_J_project(const QSymElement& q) {
  QSymElement out(Basis::N);
  for (const auto& [a, c] : convert(q, Basis::N).terms())
    if (a.length() % 2 == 0) out.add_term(a, c);
  return out;
}

QSymElement divide_by_pure_power(const QSymElement& q, int s) {
  require(s >= 1, "divisor degree must be positive");
  QSymElement qn = convert(q, Basis::N);
  if (qn.is_zero()) return QSymElement(Basis::N);
  auto degree = qn.degree();
  require(degree.has_value(), "dividend must be homogeneous");
  const int n = *degree;
  require(n >= s, "dividend degree " + std::to_string(n) +
                      " is below the divisor degree " + std::to_string(s));

  std::vector<Composition> unknowns =
      n == s ? std::vector<Composition>{Composition{}} : compositions_of(n - s);
  std::vector<Composition> rows = compositions_of(n);
  std::map<Composition, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;

  const Composition divisor{s};
  std::vector<std::map<std::size_t, Rational>> columns;
  for (const auto& b : unknowns) {
    std::map<std::size_t, Rational> col;
    for (const auto& [v, c] : structure_constants(divisor, b)) col[row_of.at(v)] = Rational(c);
    columns.push_back(std::move(col));
  }
  std::map<std::size_t, Rational> rhs;
  for (const auto& [a, c] : qn.terms()) rhs[row_of.at(a)] = c;

  LinearSolution solution = solve_columns(columns, rhs);
  if (!solution.consistent)
    fail(ErrorKind::NotDivisible,
         q.to_string() + " is not divisible by N[" + divisor.to_string() + "]");
  if (!solution.unique)
    fail(ErrorKind::Inconsistent, "multiplication by N[" + divisor.to_string() +
                                      "] is not injective");
  QSymElement out(Basis::N);
  for (std::size_t j = 0; j < unknowns.size(); ++j) out.add_term(unknowns[j], solution.x[j]);
  return out;
}

}  // namespace nqsym

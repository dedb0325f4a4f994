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

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nqsym/composition.hpp"

namespace nqsym {

// Exact arbitrary-precision rational; gmp keeps values canonical.
using Rational = mpq_class;
using Integer = mpz_class;

bool is_integer(const Rational& q);

enum class Basis {
  Monomial,     // x^a
  Fundamental,  // L_a
  N,            // N_a = F(P_a)
};

std::string_view to_string(Basis b);
Basis parse_basis(std::string_view text);  // "M", "L" or "N"

// A quasisymmetric function written in one basis. Terms are kept in the
// canonical composition order (weight, then binary word) and zero
// coefficients are never stored. The zero composition is the scalar 1 in
// every basis.
class QSymElement {
 public:
  using Terms = std::map<Composition, Rational, GradedBinaryWordLess>;

  explicit QSymElement(Basis basis = Basis::Monomial) : basis_(basis) {}
  QSymElement(Basis basis, Terms terms);

  static QSymElement basis_element(Basis basis, const Composition& a,
                                   const Rational& coefficient = 1);
  static QSymElement scalar(const Rational& c, Basis basis = Basis::Monomial);

  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const& noexcept { return terms_; }
  Terms terms() && noexcept { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Rational coefficient(const Composition& a) const;
  void add_term(const Composition& a, const Rational& c);

  bool is_integral() const;
  bool has_nonnegative_coefficients() const;
  // Weights present among the terms.
  std::set<int> degrees() const;
  bool is_homogeneous() const { return degrees().size() <= 1; }
  // Degree of a nonzero homogeneous element.
  std::optional<int> degree() const;
  QSymElement homogeneous_component(int n) const;

  // Mixed-basis sums are carried out in the monomial basis.
  QSymElement& operator+=(const QSymElement& other);
  QSymElement& operator-=(const QSymElement& other);
  QSymElement& operator*=(const Rational& c);

  friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
  friend QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }
  friend QSymElement operator*(const Rational& c, QSymElement a) { return a *= c; }
  friend QSymElement operator*(QSymElement a, const Rational& c) { return a *= c; }

  friend bool operator==(const QSymElement& a, const QSymElement& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  // e.g. "3*N[21] + 1/2*N[111]"; "0" for the zero element.
  std::string to_string() const;

 private:
  Basis basis_;
  Terms terms_;
};

// The same function written in `target`.
QSymElement convert(const QSymElement& q, Basis target);

}  // namespace nqsym

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

#include <map>
#include <string>
#include <utility>

#include "nqsym/composition.hpp"
#include "nqsym/poset.hpp"
#include "nqsym/qsym.hpp"

namespace nqsym {

// x^a * x^b by overlapping shuffles of the exponent sequences (M basis).
QSymElement quasi_shuffle(const Composition& a, const Composition& b);

// Product of two elements. Both N: computed from structure constants and
// returned in N. Otherwise computed in M and returned in the common basis of
// the factors, or in M when they differ.
QSymElement mul(const QSymElement& p, const QSymElement& q);

using StructureConstants = std::map<Composition, Integer, GradedBinaryWordLess>;

// N_a * N_b = sum c_v N_v. Counts the types of the ordered partitions that
// the odd/even split induces on the product poset; memoized.
StructureConstants structure_constants(const Composition& a, const Composition& b);
// Same numbers from walking every linear extension of the product poset.
StructureConstants structure_constants_by_enumeration(
    const Composition& a, const Composition& b, EnumerationOptions options = {});

QSymElement mul_nbasis(const Composition& a, const Composition& b);

// Finite sums of a (x) b with both sides in one basis each.
class Tensor {
 public:
  using Key = std::pair<Composition, Composition>;
  struct KeyLess {
    bool operator()(const Key& x, const Key& y) const;
  };
  using Terms = std::map<Key, Rational, KeyLess>;

  explicit Tensor(Basis left = Basis::Monomial, Basis right = Basis::Monomial)
      : left_(left), right_(right) {}

  Basis left_basis() const noexcept { return left_; }
  Basis right_basis() const noexcept { return right_; }
  const Terms& terms() const& noexcept { return terms_; }
  Terms terms() && noexcept { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Composition& a, const Composition& b) const;
  void add_term(const Composition& a, const Composition& b, const Rational& c);

  friend bool operator==(const Tensor&, const Tensor&) = default;

  // e.g. "M[11] (x) 1 + M[1] (x) M[1]".
  std::string to_string() const;

 private:
  Basis left_;
  Basis right_;
  Terms terms_;
};

// Deconcatenation: x^a maps to the sum of x^b (x) x^c over a = b.c.
Tensor coproduct_monomial(const QSymElement& q);

// Rewrites both tensor factors in `target`.
Tensor convert(const Tensor& t, Basis target);

}  // namespace nqsym

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

#include "nqsym/qsym.hpp"

#include "nqsym/error.hpp"

namespace nqsym {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::Monomial: return "M";
    case Basis::Fundamental: return "L";
    case Basis::N: return "N";
  }
  return "?";
}

Basis parse_basis(std::string_view text) {
  if (text == "M") return Basis::Monomial;
  if (text == "L") return Basis::Fundamental;
  if (text == "N") return Basis::N;
  fail(ErrorKind::InvalidArgument, "unknown basis '" + std::string(text) +
                                       "', expected M, L or N");
}

QSymElement::QSymElement(Basis basis, Terms terms) : basis_(basis) {
  for (auto& [a, c] : terms) add_term(a, c);
}

QSymElement QSymElement::basis_element(Basis basis, const Composition& a,
                                       const Rational& coefficient) {
  QSymElement e(basis);
  e.add_term(a, coefficient);
  return e;
}

QSymElement QSymElement::scalar(const Rational& c, Basis basis) {
  return basis_element(basis, Composition{}, c);
}

Rational QSymElement::coefficient(const Composition& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QSymElement::add_term(const Composition& a, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool QSymElement::is_integral() const {
  for (const auto& [a, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

bool QSymElement::has_nonnegative_coefficients() const {
  for (const auto& [a, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::set<int> QSymElement::degrees() const {
  std::set<int> out;
  for (const auto& [a, c] : terms_) out.insert(a.weight());
  return out;
}

std::optional<int> QSymElement::degree() const {
  auto d = degrees();
  if (d.size() != 1) return std::nullopt;
  return *d.begin();
}

QSymElement QSymElement::homogeneous_component(int n) const {
  QSymElement out(basis_);
  for (const auto& [a, c] : terms_)
    if (a.weight() == n) out.terms_.emplace(a, c);
  return out;
}

QSymElement& QSymElement::operator+=(const QSymElement& other) {
  if (basis_ != other.basis_) {
    *this = convert(*this, Basis::Monomial);
    return *this += convert(other, Basis::Monomial);
  }
  for (const auto& [a, c] : other.terms_) add_term(a, c);
  return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& other) {
  if (basis_ != other.basis_) {
    *this = convert(*this, Basis::Monomial);
    return *this -= convert(other, Basis::Monomial);
  }
  for (const auto& [a, c] : other.terms_) add_term(a, -c);
  return *this;
}

QSymElement& QSymElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, coefficient] : terms_) coefficient *= c;
  return *this;
}

std::string QSymElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (magnitude != 1 || a.empty()) {
      out += magnitude.get_str();
      if (!a.empty()) out += "*";
    }
    if (!a.empty()) {
      out += std::string(nqsym::to_string(basis_)) + "[" + a.to_string() + "]";
    }
  }
  return out;
}

}  // namespace nqsym

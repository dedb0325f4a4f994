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

#include "nqsym/product.hpp"

#include <mutex>

#include "nqsym/conversion.hpp"
#include "nqsym/error.hpp"

namespace nqsym {

namespace {

using Word = std::vector<int>;

void quasi_shuffle_into(const Composition& a, const Composition& b,
                        std::size_t i, std::size_t j, Word& prefix,
                        std::map<Word, Integer>& out) {
  if (i == a.length() && j == b.length()) {
    out[prefix] += 1;
    return;
  }
  if (i < a.length()) {
    prefix.push_back(a[i]);
    quasi_shuffle_into(a, b, i + 1, j, prefix, out);
    prefix.pop_back();
  }
  if (j < b.length()) {
    prefix.push_back(b[j]);
    quasi_shuffle_into(a, b, i, j + 1, prefix, out);
    prefix.pop_back();
  }
  if (i < a.length() && j < b.length()) {
    prefix.push_back(a[i] + b[j]);
    quasi_shuffle_into(a, b, i + 1, j + 1, prefix, out);
    prefix.pop_back();
  }
}

QSymElement product_in_monomial(const QSymElement& p, const QSymElement& q) {
  QSymElement pm = convert(p, Basis::Monomial);
  QSymElement qm = convert(q, Basis::Monomial);
  QSymElement out(Basis::Monomial);
  for (const auto& [a, c] : pm.terms())
    for (const auto& [b, d] : qm.terms())
      for (const auto& [v, e] : quasi_shuffle(a, b).terms()) out.add_term(v, c * d * e);
  return out;
}

}  // namespace

QSymElement quasi_shuffle(const Composition& a, const Composition& b) {
  std::map<Word, Integer> counts;
  Word prefix;
  quasi_shuffle_into(a, b, 0, 0, prefix, counts);
  QSymElement out(Basis::Monomial);
  for (const auto& [w, c] : counts) out.add_term(Composition(w), Rational(c));
  return out;
}

QSymElement mul(const QSymElement& p, const QSymElement& q) {
  if (p.basis() == Basis::N && q.basis() == Basis::N) {
    QSymElement out(Basis::N);
    for (const auto& [a, c] : p.terms())
      for (const auto& [b, d] : q.terms())
        for (const auto& [v, e] : structure_constants(a, b)) out.add_term(v, c * d * Rational(e));
    return out;
  }
  QSymElement out = product_in_monomial(p, q);
  return p.basis() == q.basis() ? convert(out, p.basis()) : out;
}

StructureConstants structure_constants(const Composition& a, const Composition& b) {
  if (a.empty()) return {{b, Integer(1)}};
  if (b.empty()) return {{a, Integer(1)}};
  static std::mutex mutex;
  static std::map<std::pair<Composition, Composition>, StructureConstants> cache;
  const auto key = std::make_pair(a, b);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  ProductPoset pp = nbasis_product_poset(a, b);
  StructureConstants out;
  for (const auto& [type, count] : induced_type_counts(pp.poset, pp.split))
    out.emplace(type, Integer(static_cast<unsigned long>(count)));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.try_emplace(key, std::move(out)).first->second;
}

StructureConstants structure_constants_by_enumeration(
    const Composition& a, const Composition& b, EnumerationOptions options) {
  if (a.empty()) return {{b, Integer(1)}};
  if (b.empty()) return {{a, Integer(1)}};
  ProductPoset pp = nbasis_product_poset(a, b);
  StructureConstants out;
  for (const auto& k : decompose_by(pp.poset, pp.split, options)) out[k.type()] += 1;
  return out;
}

QSymElement mul_nbasis(const Composition& a, const Composition& b) {
  QSymElement out(Basis::N);
  for (const auto& [v, c] : structure_constants(a, b)) out.add_term(v, Rational(c));
  return out;
}

bool Tensor::KeyLess::operator()(const Key& x, const Key& y) const {
  GradedBinaryWordLess less;
  if (less(x.first, y.first)) return true;
  if (less(y.first, x.first)) return false;
  return less(x.second, y.second);
}

Rational Tensor::coefficient(const Composition& a, const Composition& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Tensor::add_term(const Composition& a, const Composition& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string Tensor::to_string() const {
  if (terms_.empty()) return "0";
  auto side = [](Basis basis, const Composition& a) {
    return a.empty() ? std::string("1")
                     : std::string(nqsym::to_string(basis)) + "[" + a.to_string() + "]";
  };
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    Rational magnitude = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += side(left_, key.first) + " (x) " + side(right_, key.second);
  }
  return out;
}

Tensor coproduct_monomial(const QSymElement& q) {
  Tensor out(Basis::Monomial, Basis::Monomial);
  for (const auto& [a, c] : convert(q, Basis::Monomial).terms()) {
    const auto& parts = a.parts();
    for (std::size_t cut = 0; cut <= parts.size(); ++cut) {
      Composition left(std::vector<int>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(cut)));
      Composition right(std::vector<int>(parts.begin() + static_cast<std::ptrdiff_t>(cut), parts.end()));
      out.add_term(left, right, c);
    }
  }
  return out;
}

Tensor convert(const Tensor& t, Basis target) {
  Tensor out(target, target);
  for (const auto& [key, c] : t.terms()) {
    QSymElement left = expand_basis_element(t.left_basis(), key.first, target);
    QSymElement right = expand_basis_element(t.right_basis(), key.second, target);
    for (const auto& [a, x] : left.terms())
      for (const auto& [b, y] : right.terms()) out.add_term(a, b, c * x * y);
  }
  return out;
}

}  // namespace nqsym

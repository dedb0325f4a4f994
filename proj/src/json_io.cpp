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

#include "nqsym/json_io.hpp"

#include <limits>
#include <string>

#include "nqsym/error.hpp"

namespace nqsym {

namespace {

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer z;
    require(z.set_str(j.get<std::string>(), 10) == 0, "malformed integer string");
    return z;
  }
  fail(ErrorKind::InvalidArgument, "expected an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* name) {
  require(j.is_object() && j.contains(name),
          std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

Json to_json(const Composition& a) { return Json(a.parts()); }

Composition composition_from_json(const Json& j) {
  if (j.is_string()) return Composition::parse(j.get<std::string>());
  require(j.is_array(), "a composition is an array of positive integers");
  std::vector<int> parts;
  for (const auto& x : j) {
    require(x.is_number_integer(), "composition parts must be integers");
    parts.push_back(x.get<int>());
  }
  return Composition(std::move(parts));
}

Json rational_to_json(const Rational& q) {
  Json out = Json::object();
  out["num"] = integer_to_json(q.get_num());
  out["den"] = integer_to_json(q.get_den());
  return out;
}

Rational rational_from_json(const Json& num, const Json& den) {
  Integer d = integer_from_json(den);
  require(d != 0, "zero denominator");
  Rational q(integer_from_json(num), d);
  q.canonicalize();
  return q;
}

Json to_json(const QSymElement& q) {
  Json out = Json::object();
  out["basis"] = std::string(to_string(q.basis()));
  Json terms = Json::array();
  for (const auto& [a, c] : q.terms()) {
    Json t = Json::object();
    t["comp"] = to_json(a);
    Json r = rational_to_json(c);
    t["num"] = r["num"];
    t["den"] = r["den"];
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

QSymElement element_from_json(const Json& j) {
  QSymElement out(parse_basis(field(j, "basis").get<std::string>()));
  const Json& terms = field(j, "terms");
  require(terms.is_array(), "\"terms\" must be an array");
  for (const auto& t : terms) {
    Json den = t.contains("den") ? t.at("den") : Json(1);
    out.add_term(composition_from_json(field(t, "comp")),
                 rational_from_json(field(t, "num"), den));
  }
  return out;
}

Json to_json(const Tensor& t) {
  Json out = Json::object();
  out["left"] = std::string(to_string(t.left_basis()));
  out["right"] = std::string(to_string(t.right_basis()));
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms()) {
    Json term = Json::object();
    term["left"] = to_json(key.first);
    term["right"] = to_json(key.second);
    Json r = rational_to_json(c);
    term["num"] = r["num"];
    term["den"] = r["den"];
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const Matroid& m) {
  Json out = Json::object();
  out["n"] = m.ground_size();
  out["bases"] = m.basis_lists();
  return out;
}

Matroid matroid_from_json(const Json& j) {
  const int n = field(j, "n").get<int>();
  std::vector<std::vector<int>> bases;
  for (const auto& b : field(j, "bases")) bases.push_back(b.get<std::vector<int>>());
  return Matroid::from_lists(n, bases);
}

Json to_json(const LabeledPoset& p) {
  Json out = Json::object();
  out["labels"] = p.labels();
  Json covers = Json::array();
  for (const auto& [x, y] : p.covers()) covers.push_back(Json::array({x, y}));
  out["covers"] = std::move(covers);
  return out;
}

LabeledPoset poset_from_json(const Json& j) {
  std::vector<int> labels = field(j, "labels").get<std::vector<int>>();
  std::vector<std::pair<int, int>> relations;
  if (j.contains("covers"))
    for (const auto& c : j.at("covers")) {
      require(c.is_array() && c.size() == 2, "covers are pairs [x, y]");
      relations.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
  return LabeledPoset(std::move(labels), relations);
}

Json to_json(const Rank2Representative& r) {
  Json out = Json::object();
  out["lambda"] = to_json(r.lambda);
  out["blocks"] = r.blocks;
  return out;
}

Json to_json(const SplitCertificate& c) {
  Json out = Json::object();
  out["S"] = c.S;
  out["parent"] = to_json(c.parent);
  Json low = to_json(c.at_most_one);
  low["halfspace"] = "at_most_one";
  Json high = to_json(c.at_least_one);
  high["halfspace"] = "at_least_one";
  out["children"] = Json::array({low, high});
  return out;
}

Json to_json(const GeomDecomposition& g) {
  Json out = Json::object();
  out["lambda"] = to_json(g.root.lambda);
  Json reps = Json::array();
  for (const auto& r : g.representatives) reps.push_back(to_json(r));
  out["representatives"] = std::move(reps);
  Json splits = Json::array();
  for (const auto& s : g.splits) splits.push_back(to_json(s));
  out["splits"] = std::move(splits);
  return out;
}

}  // namespace nqsym

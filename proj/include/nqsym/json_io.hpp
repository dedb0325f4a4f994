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

#include <json.hpp>

#include "nqsym/composition.hpp"
#include "nqsym/matroid.hpp"
#include "nqsym/polytope.hpp"
#include "nqsym/poset.hpp"
#include "nqsym/product.hpp"
#include "nqsym/qsym.hpp"

namespace nqsym {

using Json = nlohmann::ordered_json;

Json to_json(const Composition& a);
Composition composition_from_json(const Json& j);

// {"num":..,"den":..}; integers beyond 64 bits are written as strings.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& num, const Json& den);

// {"basis":"M|L|N","terms":[{"comp":[..],"num":..,"den":..}]}, terms in
// degree then binary-word order.
Json to_json(const QSymElement& q);
QSymElement element_from_json(const Json& j);

// {"left":"M","right":"M","terms":[{"left":[..],"right":[..],"num":..,"den":..}]}
Json to_json(const Tensor& t);

// {"n":..,"bases":[[1-based elements]]}
Json to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

// {"labels":[..],"covers":[[x,y],..]}
Json to_json(const LabeledPoset& p);
LabeledPoset poset_from_json(const Json& j);

Json to_json(const Rank2Representative& r);
Json to_json(const SplitCertificate& c);
Json to_json(const GeomDecomposition& g);

}  // namespace nqsym

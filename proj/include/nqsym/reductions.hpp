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

#include <set>

#include "nqsym/composition.hpp"
#include "nqsym/qsym.hpp"

namespace nqsym {

using CompositionSet = std::set<Composition, GradedBinaryWordLess>;

// Compositions with a nonzero coefficient in the N-basis expansion.
CompositionSet supp(const QSymElement& q);

// supp(q) lies in {a : |a| = n, rank(a) = r}.
bool in_Vnr(const QSymElement& q, int n, int r);

// N-expansion with the odd-length terms dropped: the canonical
// representative of q modulo the ideal generated by degree one.
QSymElement quotient_J_project(const QSymElement& q);

// The p with N_(s) * p = q (N basis). q must be homogeneous of degree at
// least s. Throws ErrorKind::NotDivisible when no such p exists.
QSymElement divide_by_pure_power(const QSymElement& q, int s);

}  // namespace nqsym

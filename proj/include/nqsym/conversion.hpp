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

#include <vector>

#include "nqsym/composition.hpp"
#include "nqsym/qsym.hpp"

namespace nqsym {

// N_a = F(P_a) in the fundamental basis; the zero composition gives 1.
QSymElement n_basis_element(const Composition& a);

// x^a expanded in `target`, and likewise for L_a and N_a.
QSymElement expand_basis_element(Basis source, const Composition& a,
                                 Basis target);

// entries[i][j] is the coefficient of the target basis element indexed by
// index[j] in the source basis element indexed by index[i].
struct TransitionMatrix {
  int n = 0;
  Basis from = Basis::N;
  Basis to = Basis::Fundamental;
  std::vector<Composition> index;
  std::vector<std::vector<Rational>> entries;
};

TransitionMatrix transition_matrix(
    int n, Basis from, Basis to,
    CompositionOrder order = CompositionOrder::BinaryWord);

// N -> L with column j holding the coefficient of L_{runs_from_rho(index[j])}.
// Every linear extension pi of P_a contributes to column rho(pi), which
// refines a, and exactly one of them has rho(pi) = a.
TransitionMatrix rho_indexed_n_to_l(
    int n, CompositionOrder order = CompositionOrder::BinaryWord);

bool is_upper_unitriangular(const TransitionMatrix& m);
bool is_lower_unitriangular(const TransitionMatrix& m);
bool is_integral(const TransitionMatrix& m);
// Product of two matrices over the same index list.
TransitionMatrix compose(const TransitionMatrix& first,
                         const TransitionMatrix& second);
bool is_identity(const TransitionMatrix& m);

// True iff a strictly refines b implies that a comes before b in the order.
bool order_extends_refinement(int n, CompositionOrder order);

}  // namespace nqsym

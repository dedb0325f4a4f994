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

#include <optional>
#include <string>
#include <vector>

#include "nqsym/composition.hpp"
#include "nqsym/qsym.hpp"

namespace nqsym {

// Building blocks of V^n_2 in the N basis, 1 <= k <= n-1. A composition
// whose last part would be 0 drops that part.
QSymElement T_vec(int n, int k);
QSymElement U_vec(int n, int k);     // k(n-k) T^n_k
QSymElement Ubar_vec(int n, int k);  // U^n_k, 0 or -U^n_{n-k} by k vs n/2

// Sum of U^n_{lambda_i}; equals F(M_lambda).
QSymElement rank2_qsym(const Composition& lambda);

// Coordinates t_1..t_{n-1} of q in V^n_2 over U^n_1..U^n_{n-1}.
std::vector<Rational> u_coordinates(const QSymElement& q, int n);

// Coordinates of the class of q in V^n_2 / (V^n_2 cap m^2) over
// Ubar^n_k, 1 <= k < n/2: entry k-1 is t_k - t_{n-k}.
std::vector<Rational> mod_m2(const QSymElement& q, int n);
// Same for F(M_lambda), read off the parts directly.
std::vector<Rational> mod_m2_of_partition(const Composition& lambda);

// A rank two matroid up to isomorphism and loop/coloop exchange:
// M_lambda plus `loops` loops. `coloops` counts the coloops of M_lambda
// itself, which only occur for lambda = (1,1) and (a,1).
struct Rank2Description {
  Composition lambda;
  int loops = 0;
  int coloops = 0;
  int loops_and_coloops = 0;  // as read from the invariant
  std::string summary() const;
};

// Reads the class back from q = F(M). Throws ErrorKind::NotRankTwo when q
// is not the invariant of a rank two matroid.
Rank2Description recover_rank2(const QSymElement& q);

// lambda from mod-m^2 coordinates of a connected M_lambda of weight n with
// at least three parts. Throws ErrorKind::Inconsistent otherwise.
Composition recover_rank2_modm2(const std::vector<Rational>& coordinates, int n);

}  // namespace nqsym

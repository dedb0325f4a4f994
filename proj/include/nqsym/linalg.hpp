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

#include <cstddef>
#include <map>
#include <vector>

#include "nqsym/qsym.hpp"

namespace nqsym {

using RationalMatrix = std::vector<std::vector<Rational>>;

Rational determinant(RationalMatrix m);
std::size_t matrix_rank(RationalMatrix m);

struct LinearSolution {
  bool consistent = false;
  bool unique = false;
  std::vector<Rational> x;  // one solution when consistent, free variables 0
};

// Solves sum_j x_j * columns[j] = rhs exactly. Vectors are sparse maps from
// row index to value.
LinearSolution solve_columns(
    const std::vector<std::map<std::size_t, Rational>>& columns,
    const std::map<std::size_t, Rational>& rhs);

}  // namespace nqsym

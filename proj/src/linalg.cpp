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

#include "nqsym/linalg.hpp"

#include <utility>

namespace nqsym {

namespace {

// Row-reduces in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t columns,
                                    int* sign = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t found = row;
    while (found < m.size() && m[found][col] == 0) ++found;
    if (found == m.size()) continue;
    if (found != row) {
      std::swap(m[found], m[row]);
      if (sign) *sign = -*sign;
    }
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[row][col];
      for (std::size_t c = col; c < m[r].size(); ++c)
        if (m[row][c] != 0) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  int sign = 1;
  auto pivots = row_reduce(m, n, &sign);
  if (pivots.size() < n) return 0;
  Rational det = sign;
  for (std::size_t i = 0; i < n; ++i) det *= m[i][i];
  return det;
}

std::size_t matrix_rank(RationalMatrix m) {
  const std::size_t columns = m.empty() ? 0 : m.front().size();
  return row_reduce(m, columns).size();
}

LinearSolution solve_columns(
    const std::vector<std::map<std::size_t, Rational>>& columns,
    const std::map<std::size_t, Rational>& rhs) {
  // Only rows that occur somewhere matter; compress them.
  std::map<std::size_t, std::size_t> row_of;
  for (const auto& col : columns)
    for (const auto& [r, v] : col) row_of.try_emplace(r, 0);
  for (const auto& [r, v] : rhs) row_of.try_emplace(r, 0);
  std::size_t next = 0;
  for (auto& [r, slot] : row_of) slot = next++;

  const std::size_t width = columns.size();
  RationalMatrix m(row_of.size(), std::vector<Rational>(width + 1));
  for (std::size_t j = 0; j < width; ++j)
    for (const auto& [r, v] : columns[j]) m[row_of[r]][j] = v;
  for (const auto& [r, v] : rhs) m[row_of[r]][width] = v;

  auto pivots = row_reduce(m, width);
  LinearSolution out;
  for (std::size_t r = pivots.size(); r < m.size(); ++r)
    if (m[r][width] != 0) return out;
  out.consistent = true;
  out.unique = pivots.size() == width;
  out.x.assign(width, 0);
  for (std::size_t i = pivots.size(); i-- > 0;) {
    const std::size_t col = pivots[i];
    Rational value = m[i][width];
    for (std::size_t c = col + 1; c < width; ++c)
      if (m[i][c] != 0) value -= m[i][c] * out.x[c];
    out.x[col] = value / m[i][col];
  }
  return out;
}

}  // namespace nqsym

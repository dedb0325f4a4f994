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

#include "nqsym/rank2.hpp"

#include <algorithm>
#include <map>

#include "nqsym/error.hpp"
#include "nqsym/linalg.hpp"
#include "nqsym/matroid.hpp"
#include "nqsym/reductions.hpp"

namespace nqsym {

namespace {

void require_index(int n, int k) {
  require(n >= 2 && k >= 1 && k <= n - 1,
          "rank two vectors need n >= 2 and 1 <= k <= n-1, got n=" +
              std::to_string(n) + " k=" + std::to_string(k));
}

Composition without_trailing_zero(std::vector<int> parts) {
  if (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Composition(std::move(parts));
}

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

QSymElement T_vec(int n, int k) {
  require_index(n, k);
  QSymElement out(Basis::N);
  out.add_term(without_trailing_zero({2, n - 2}), Rational(1, 2));
  for (int j = 1; j <= k - 1; ++j)
    out.add_term(without_trailing_zero({1, j, 1, n - 2 - j}), Rational(binomial(k - 1, j)));
  return out;
}

QSymElement U_vec(int n, int k) { return Rational(k * (n - k)) * T_vec(n, k); }

QSymElement Ubar_vec(int n, int k) {
  require_index(n, k);
  if (2 * k < n) return U_vec(n, k);
  if (2 * k == n) return QSymElement(Basis::N);
  return Rational(-1) * U_vec(n, n - k);
}

QSymElement rank2_qsym(const Composition& lambda) {
  require(is_partition(lambda) && lambda.length() >= 2,
          "rank two classes are indexed by partitions with at least two parts");
  const int n = lambda.weight();
  QSymElement out(Basis::N);
  for (int part : lambda) out += U_vec(n, part);
  return out;
}

std::vector<Rational> u_coordinates(const QSymElement& q, int n) {
  require(n >= 2, "V^n_2 needs n >= 2");
  const QSymElement qn = convert(q, Basis::N);
  std::map<Composition, std::size_t> row_of;
  auto row = [&](const Composition& a) {
    return row_of.try_emplace(a, row_of.size()).first->second;
  };
  std::vector<std::map<std::size_t, Rational>> columns;
  for (int k = 1; k <= n - 1; ++k) {
    std::map<std::size_t, Rational> col;
    for (const auto& [a, c] : U_vec(n, k).terms()) col[row(a)] = c;
    columns.push_back(std::move(col));
  }
  std::map<std::size_t, Rational> rhs;
  for (const auto& [a, c] : qn.terms()) {
    if (a.weight() != n || rank(a) != 2)
      fail(ErrorKind::InvalidArgument, "element is not in V^" + std::to_string(n) + "_2");
    rhs[row(a)] = c;
  }
  LinearSolution solution = solve_columns(columns, rhs);
  if (!solution.consistent)
    fail(ErrorKind::InvalidArgument,
         "element is not in the span of the U vectors of degree " + std::to_string(n));
  return solution.x;
}

std::vector<Rational> mod_m2(const QSymElement& q, int n) {
  std::vector<Rational> t = u_coordinates(q, n);
  std::vector<Rational> out;
  for (int k = 1; 2 * k < n; ++k)
    out.push_back(t[static_cast<std::size_t>(k - 1)] - t[static_cast<std::size_t>(n - k - 1)]);
  return out;
}

std::vector<Rational> mod_m2_of_partition(const Composition& lambda) {
  require(is_partition(lambda) && lambda.length() >= 2,
          "rank two classes are indexed by partitions with at least two parts");
  const int n = lambda.weight();
  std::vector<Rational> out(static_cast<std::size_t>((n - 1) / 2));
  for (int part : lambda) {
    if (2 * part < n) out[static_cast<std::size_t>(part - 1)] += 1;
    if (2 * part > n) out[static_cast<std::size_t>(n - part - 1)] -= 1;
  }
  return out;
}

std::string Rank2Description::summary() const {
  std::string out = "M_" + lambda.to_string();
  if (loops > 0) out += " + " + std::to_string(loops) + " loop" + (loops == 1 ? "" : "s");
  return out;
}

namespace {

[[noreturn]] void not_rank_two(const std::string& why) {
  fail(ErrorKind::NotRankTwo, "not a rank two invariant: " + why);
}

int coloops_of(const Composition& lambda) {
  if (lambda.length() != 2) return 0;
  return (lambda[0] == 1) + (lambda[1] == 1);
}

}  // namespace

Rank2Description recover_rank2(const QSymElement& q) {
  const QSymElement qn = convert(q, Basis::N);
  auto degree = qn.degree();
  if (!degree) not_rank_two("expected a nonzero homogeneous element");
  const int n = *degree;
  if (n < 2) not_rank_two("degree below 2");
  const int c = loops_coloops_from_qsym(qn);
  Rank2Description out;
  out.loops_and_coloops = c;

  if (c == n) {
    // Two coloops and n-2 loops: F = L_1^n = N_(n).
    if (qn != QSymElement::basis_element(Basis::N, Composition{n}))
      not_rank_two("every element is a loop or coloop but F is not N_(n)");
    out.lambda = Composition{1, 1};
    out.loops = n - 2;
    out.coloops = 2;
    return out;
  }

  QSymElement rest = qn;
  if (c > 0) {
    try {
      rest = divide_by_pure_power(qn, c);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotDivisible) throw;
      not_rank_two("F is not divisible by N_(" + std::to_string(c) + ")");
    }
  }
  const int m = n - c;

  if (in_Vnr(rest, m, 1)) {
    // One coloop, c-1 loops and U_{1,m}, that is M_(m,1) plus c-1 loops.
    if (c == 0 || m < 2 ||
        rest != QSymElement::basis_element(Basis::N, Composition{1, m - 1}, m))
      not_rank_two("rank one remainder is not F(U_{1,m})");
    out.lambda = Composition{m, 1};
    out.loops = c - 1;
    out.coloops = 1;
    return out;
  }

  if (m < 2 || !in_Vnr(rest, m, 2)) not_rank_two("remainder is not in V^m_2");
  std::vector<Rational> t = u_coordinates(rest, m);
  std::vector<int> parts;
  for (int k = m - 1; k >= 1; --k) {
    const Rational& count = t[static_cast<std::size_t>(k - 1)];
    if (!is_integer(count) || count < 0) not_rank_two("U-coordinates are not counts");
    for (long i = 0; i < count.get_num().get_si(); ++i) parts.push_back(k);
  }
  Composition lambda(parts);
  if (lambda.weight() != m || lambda.length() < 2)
    not_rank_two("U-coordinates do not describe a partition of " + std::to_string(m));
  if (rank2_qsym(lambda) != rest) not_rank_two("reconstruction does not match");
  out.lambda = lambda;
  out.loops = c;
  out.coloops = coloops_of(lambda);
  return out;
}

Composition recover_rank2_modm2(const std::vector<Rational>& coordinates, int n) {
  const std::size_t expected = static_cast<std::size_t>((n - 1) / 2);
  if (n < 3 || coordinates.size() != expected)
    fail(ErrorKind::Inconsistent, "expected " + std::to_string(expected) +
                                      " coordinates for weight " + std::to_string(n));
  std::vector<int> parts;
  int small_weight = 0;
  int negative_at = 0;
  for (int k = 1; 2 * k < n; ++k) {
    const Rational& c = coordinates[static_cast<std::size_t>(k - 1)];
    if (!is_integer(c)) fail(ErrorKind::Inconsistent, "coordinates must be integers");
    if (c < 0) {
      if (c != -1 || negative_at != 0)
        fail(ErrorKind::Inconsistent, "at most one coordinate may be -1");
      negative_at = k;
      continue;
    }
    for (long i = 0; i < c.get_num().get_si(); ++i) parts.push_back(k);
    small_weight += k * static_cast<int>(c.get_num().get_si());
  }
  const int remaining = n - small_weight;
  if (remaining < 0 || (remaining > 0 && 2 * remaining < n))
    fail(ErrorKind::Inconsistent, "coordinates do not fit weight " + std::to_string(n));
  if (2 * remaining > n) {
    if (negative_at != n - remaining)
      fail(ErrorKind::Inconsistent, "large part does not match the negative coordinate");
  } else if (negative_at != 0) {
    fail(ErrorKind::Inconsistent, "negative coordinate without a large part");
  }
  if (remaining > 0) parts.push_back(remaining);
  Composition lambda = sorted_decreasing(Composition(parts));
  if (lambda.length() < 3)
    fail(ErrorKind::Inconsistent, "coordinates describe fewer than three parts");
  return lambda;
}

}  // namespace nqsym

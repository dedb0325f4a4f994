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

#include "nqsym/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "nqsym/conversion.hpp"
#include "nqsym/error.hpp"
#include "nqsym/linalg.hpp"
#include "nqsym/matroid.hpp"
#include "nqsym/permutation.hpp"
#include "nqsym/polytope.hpp"
#include "nqsym/poset.hpp"
#include "nqsym/product.hpp"
#include "nqsym/rank2.hpp"
#include "nqsym/reductions.hpp"
#include "nqsym/set_partition.hpp"

namespace nqsym {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  int failures = 0;

  // Records a failed expectation; keeps the first few messages.
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    if (failures++ < 3) detail << "FAILED " << what << "; ";
  }
};

std::vector<Composition> rank2_partitions(int n) {
  std::vector<Composition> out;
  for (const auto& lambda : partitions_of(n))
    if (lambda.length() >= 2) out.push_back(lambda);
  return out;
}

void check_examples(Outcome& o) {
  QSymElement expected(Basis::Fundamental);
  for (const char* c : {"14", "131", "113", "1121"}) expected.add_term(Composition::parse(c), 1);
  o.expect(n_basis_element(Composition::parse("122")) == expected, "N_122 expansion");

  o.expect(runs(Permutation::parse("934756218")).to_string() == "13212", "runs of 934756218");
  const Permutation p = Permutation::parse("184356729");
  o.expect(rho(p).to_string() == "22311", "rho of 184356729");
  o.expect(ascent_word(p) == std::vector<int>{1, 1, 0, 0, 1, 1, 1, 0, 1},
           "ascent word of 184356729");

  std::vector<std::string> fib;
  for (const auto& q : fibre(OrderedPartition({{2, 7}, {5}, {1, 8}}))) fib.push_back(q.to_string());
  o.expect(fib == std::vector<std::string>{"27518", "27581", "72518", "72581"},
           "fibre of ({2,7},{5},{1,8})");

  const OrderedPartition k = induced_partition_by_set_partition(
      Permutation::parse("965412378"), SetPartition({{1, 4}, {2, 6, 8, 9}, {3, 5, 7}}));
  o.expect(k == OrderedPartition({{6, 9}, {5}, {1, 4}, {2}, {3, 7}, {8}}),
           "induced ordered partition of 965412378");

  std::vector<std::string> ext;
  for (const auto& q : linear_extensions(build_p_alpha(Composition::parse("122"))))
    ext.push_back(q.to_string());
  o.expect(ext == std::vector<std::string>{"31245", "31254", "32145", "32154"},
           "linear extensions of P_122");
  o.expect(p_alpha_antichains(Composition::parse("122")) ==
               std::vector<Block>{{3}, {1, 2}, {4, 5}},
           "antichains of P_122");
  if (o.passed) o.detail << "all seven examples match";
}

void check_z_basis(Outcome& o, int bound) {
  bool literal = true;
  bool substance = true;
  for (int n = 1; n <= bound; ++n) {
    const TransitionMatrix plain = transition_matrix(n, Basis::N, Basis::Fundamental);
    const TransitionMatrix by_rho = rho_indexed_n_to_l(n);
    const bool bw_triangular =
        is_upper_unitriangular(plain) || is_lower_unitriangular(plain) ||
        is_upper_unitriangular(by_rho) || is_lower_unitriangular(by_rho);
    if (!bw_triangular) {
      if (literal) o.detail << "not unitriangular under binary-word order from n=" << n << "; ";
      literal = false;
    }
    // The Z-basis content: integral, unit lower triangular once columns are
    // matched by rho and rows ordered by a refinement-extending order, and
    // an integral inverse.
    const TransitionMatrix lex = rho_indexed_n_to_l(n, CompositionOrder::Lexicographic);
    const TransitionMatrix inverse = transition_matrix(n, Basis::Fundamental, Basis::N);
    bool ok = is_integral(plain) && is_lower_unitriangular(lex) && is_integral(inverse) &&
              is_identity(compose(plain, inverse)) && determinant(lex.entries) == 1 &&
              order_extends_refinement(n, CompositionOrder::Lexicographic);
    if (!ok) o.detail << "Z-basis property fails at n=" << n << "; ";
    substance = substance && ok;
  }
  o.expect(literal, "unitriangular under binary-word order");
  o.expect(substance, "integral unitriangular with integral inverse");
  o.detail << "integral, unit lower triangular under lexicographic order with rho-matched columns,"
           << " integral inverse, det 1: " << (substance ? "yes" : "no")
           << "; binary-word order extends refinement for n>=3: "
           << (bound >= 3 && order_extends_refinement(3, CompositionOrder::BinaryWord) ? "yes" : "no");
}

void check_structure_constants(Outcome& o, int bound) {
  std::size_t pairs = 0;
  for (int total = 2; total <= bound; ++total)
    for (int i = 1; i < total; ++i)
      for (const auto& a : compositions_of(i))
        for (const auto& b : compositions_of(total - i)) {
          ++pairs;
          const StructureConstants sc = structure_constants(a, b);
          QSymElement product(Basis::N);
          for (const auto& [v, c] : sc) {
            o.expect(c >= 0, "nonnegative constant");
            o.expect(v.weight() == total && rank(v) == rank(a) + rank(b),
                     "grading of " + v.to_string() + " in N_" + a.to_string() + "*N_" +
                         b.to_string());
            product.add_term(v, Rational(c));
          }
          const QSymElement oracle =
              mul(convert(QSymElement::basis_element(Basis::N, a), Basis::Monomial),
                  convert(QSymElement::basis_element(Basis::N, b), Basis::Monomial));
          o.expect(convert(product, Basis::Monomial) == oracle,
                   "N_" + a.to_string() + "*N_" + b.to_string() + " against quasi-shuffle");
        }
  o.detail << pairs << " pairs checked";
}

void check_membership(Outcome& o, int bound, std::mt19937_64& rng) {
  auto check = [&](const Matroid& m, const std::string& name) {
    const QSymElement f = qsym_of_matroid(m);
    const int n = m.ground_size();
    const int r = m.rank();
    o.expect(in_Vnr(f, n, r), name + " in V^n_r");
    o.expect(f.is_integral() && f.has_nonnegative_coefficients(), name + " nonnegative integral");
    std::vector<int> top{r};
    if (n > r) top.push_back(n - r);
    o.expect(f.coefficient(Composition(top)) == static_cast<long>(m.bases().size()),
             name + " top coefficient");
  };
  std::size_t classes = 0;
  for (int n = 2; n <= bound; ++n)
    for (const auto& lambda : rank2_partitions(n)) {
      check(rank2_from_partition(lambda), "M_" + lambda.to_string());
      ++classes;
    }
  const int sample_bound = std::min(bound, 8);
  std::size_t samples = 0;
  for (; samples < 200; ++samples) {
    std::uniform_int_distribution<int> pick_n(2, sample_bound);
    const int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_r(1, n - 1);
    const Matroid m = random_matroid(n, pick_r(rng), rng, true);
    check(m, "sampled matroid");
  }
  o.detail << classes << " rank two classes, " << samples << " sampled loopless matroids";
}

void check_uniform(Outcome& o, int bound) {
  int count = 0;
  for (int n = 1; n <= bound; ++n)
    for (int r = 1; r <= n; ++r) {
      std::vector<int> parts{r};
      if (n > r) parts.push_back(n - r);
      Integer choose;
      mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
      o.expect(qsym_of_matroid(uniform(r, n)) ==
                   QSymElement::basis_element(Basis::N, Composition(parts), Rational(choose)),
               "F(U_{" + std::to_string(r) + "," + std::to_string(n) + "})");
      ++count;
    }
  o.detail << count << " uniform matroids";
}

void check_rank2_formula(Outcome& o, int bound) {
  int classes = 0;
  for (int n = 2; n <= bound; ++n)
    for (const auto& lambda : rank2_partitions(n)) {
      o.expect(rank2_qsym(lambda) == qsym_of_matroid(rank2_from_partition(lambda)),
               "formula for " + lambda.to_string());
      ++classes;
    }
  int products = 0;
  auto hook = [](int m) {
    return m == 1 ? Composition{1} : Composition{1, m - 1};
  };
  for (int n = 2; n <= bound; ++n)
    for (int a = 1; a < n; ++a) {
      const int b = n - a;
      o.expect(Rational(a * b) * mul_nbasis(hook(a), hook(b)) == U_vec(n, a) + U_vec(n, b),
               "product identity for a=" + std::to_string(a) + " b=" + std::to_string(b));
      ++products;
    }
  o.detail << classes << " classes, " << products << " product identities";
}

void check_recovery(Outcome& o, int bound) {
  int round_trips = 0;
  for (int n = 2; n <= bound; ++n)
    for (const auto& lambda : rank2_partitions(n)) {
      const Matroid m = rank2_from_partition(lambda);
      Rank2Description d = recover_rank2(qsym_of_matroid(m));
      o.expect(d.lambda == lambda && d.loops == 0, "recover " + lambda.to_string());
      ++round_trips;
      for (int extra = 1; extra <= 2; ++extra) {
        const Matroid with_loops = direct_sum(m, uniform(0, extra));
        d = recover_rank2(qsym_of_matroid(with_loops));
        o.expect(d.lambda == lambda && d.loops == extra,
                 "recover " + lambda.to_string() + " with loops");
        const Matroid with_coloops = direct_sum(m, uniform(extra, extra));
        d = recover_rank2(qsym_of_matroid(with_coloops));
        o.expect(d.lambda == lambda && d.loops_and_coloops ==
                                           extra + static_cast<int>(m.coloops().size()),
                 "recover " + lambda.to_string() + " with coloops");
        round_trips += 2;
      }
    }
  int mod_round_trips = 0;
  for (int n = 3; n <= bound; ++n) {
    std::vector<std::vector<Rational>> seen;
    for (const auto& lambda : partitions_of(n)) {
      if (lambda.length() < 3) continue;
      const auto c = mod_m2(rank2_qsym(lambda), n);
      o.expect(recover_rank2_modm2(c, n) == lambda, "mod-m2 recover " + lambda.to_string());
      o.expect(std::find(seen.begin(), seen.end(), c) == seen.end(),
               "distinct class for " + lambda.to_string());
      seen.push_back(c);
      ++mod_round_trips;
    }
  }
  o.detail << round_trips << " round trips, " << mod_round_trips << " mod-m2 round trips";
}

void check_splits(Outcome& o, int bound, std::mt19937_64& rng) {
  int splits = 0;
  int decompositions = 0;
  for (int n = 2; n <= bound; ++n)
    for (const auto& lambda : rank2_partitions(n)) {
      for (int s = 1; static_cast<std::size_t>(s) < lambda.length(); ++s) {
        o.expect(check_split(lambda, s).ok(),
                 "split " + lambda.to_string() + " at " + std::to_string(s));
        ++splits;
      }
      if (lambda.length() < 3) continue;
      std::vector<std::vector<Composition>> families{full_split_to_length3(lambda),
                                                     random_split_multiset(lambda, rng)};
      for (const auto& J : families) {
        const GeomDecomposition g = geom_decompose(lambda, J);
        std::vector<Matroid> parts;
        for (const auto& r : g.representatives) parts.push_back(r.matroid());
        o.expect(verify_polytope_decomposition(g.root.matroid(), parts, g.splits).ok,
                 "decomposition of " + lambda.to_string());
        for (std::size_t i = 0; i < J.size(); ++i)
          o.expect(g.representatives[i].lambda == sorted_decreasing(J[i]),
                   "representative class for " + lambda.to_string());
        ++decompositions;
      }
    }
  o.detail << splits << " splits, " << decompositions << " decompositions";
}

void check_hilbert(Outcome& o, int bound) {
  std::size_t multisets = 0;
  for (int n = 3; n <= bound; ++n) {
    const HilbertReport r = hilbert_basis_check(n);
    o.expect(r.ok(), "Hilbert basis at n=" + std::to_string(n) +
                         (r.failures.empty() ? "" : ": " + r.failures.front()));
    multisets += r.multisets_checked;
  }
  o.detail << "n=3.." << bound << ", " << multisets << " multisets compared";
}

void check_loops_duality_coproduct(Outcome& o, std::mt19937_64& rng) {
  const QSymElement l1 = QSymElement::basis_element(Basis::Fundamental, Composition{1});
  int loop_coloop = 0;
  for (int i = 0; i < 40; ++i) {
    std::uniform_int_distribution<int> pick_n(1, 6);
    const int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_r(0, n);
    const Matroid m = random_matroid(n, pick_r(rng), rng, false);
    const QSymElement f_loop = qsym_of_matroid(direct_sum(m, uniform(0, 1)));
    const QSymElement f_coloop = qsym_of_matroid(direct_sum(m, uniform(1, 1)));
    o.expect(f_loop == f_coloop && f_loop == mul(qsym_of_matroid(m), convert(l1, Basis::N)),
             "loop and coloop extensions");
    ++loop_coloop;
  }

  int counted = 0;
  for (; counted < 120; ++counted) {
    std::uniform_int_distribution<int> pick_n(1, 6);
    const int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_r(0, n);
    std::uniform_int_distribution<int> extra(0, 2);
    Matroid m = random_matroid(n, pick_r(rng), rng, false);
    const int loops = extra(rng);
    const int coloops = extra(rng);
    if (loops > 0) m = direct_sum(m, uniform(0, loops));
    if (coloops > 0) m = direct_sum(m, uniform(coloops, coloops));
    const int actual = static_cast<int>(m.loops().size() + m.coloops().size());
    o.expect(loops_coloops_from_qsym(qsym_of_matroid(m)) == actual, "loop and coloop count");
  }

  int dual_checks = 0;
  int n_form_checks = 0;
  for (int i = 0; i < 60; ++i) {
    std::uniform_int_distribution<int> pick_n(2, 7);
    const int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_r(1, n - 1);
    const Matroid m = random_matroid(n, pick_r(rng), rng, i % 2 == 0);
    const DualityReport d = duality_check(m);
    o.expect(d.monomial_form && d.grading, "monomial duality");
    ++dual_checks;
    if (d.n_form_applies) {
      o.expect(d.n_form, "N-basis duality");
      ++n_form_checks;
    }
  }
  const DualityReport counter = duality_check(Matroid::from_lists(3, {{1, 2}, {1, 3}}));
  o.expect(counter.monomial_form && !counter.n_form, "coloop counterexample");

  const Tensor delta = coproduct_monomial(QSymElement::basis_element(Basis::N, Composition{1, 1}));
  Tensor expected(Basis::Monomial, Basis::Monomial);
  expected.add_term(Composition{1, 1}, Composition{}, 1);
  expected.add_term(Composition{1}, Composition{1}, 1);
  expected.add_term(Composition{}, Composition{1, 1}, 1);
  o.expect(delta == expected, "coproduct of N_11");
  o.expect(convert(delta, Basis::N).coefficient(Composition{1}, Composition{1}) != 0,
           "N_1 (x) N_1 term");
  o.detail << loop_coloop << " loop/coloop pairs, " << counted << " coloop counts, "
           << dual_checks << " duality checks (" << n_form_checks << " in N form), "
           << "coproduct " << delta.to_string();
}

struct CheckInfo {
  const char* title;
  const char* anchor;
  double limit_seconds;
  int own_bound;  // 0 when the check has no degree bound
};

const CheckInfo kChecks[kCheckCount] = {
    {"worked examples are exact", "N_122 expansion, runs, rho, fibre and induced partition examples", 1, 0},
    {"N basis is a Z-basis", "unitriangular N to L transition matrix", 30, 8},
    {"structure constants", "nonnegative rank-graded N-basis structure constants", 120, 8},
    {"matroid membership and positivity", "F(M) lies in V^n_r with top coefficient #bases", 120, 9},
    {"uniform matroids", "F(U_{r,n}) = C(n,r) N_(r,n-r)", 10, 9},
    {"rank two formula", "F(M_lambda) = sum of U^n_{lambda_i}; ab N_(1,a-1) N_(1,b-1) = U^n_a + U^n_b", 60, 9},
    {"injectivity and recovery", "F determines rank two classes; mod-m2 classes determine connected ones", 60, 9},
    {"splits and decompositions", "hyperplane split relations and polytope decompositions", 120, 8},
    {"Hilbert basis", "length-three classes form the Hilbert basis modulo m2", 120, 8},
    {"loops, coloops, duality, coproduct", "loop-coloop invariance, coloop count, duality, coproduct grading", 60, 0},
};

}  // namespace

CheckResult run_check(int id, const VerifyOptions& options) {
  require(id >= 1 && id <= kCheckCount, "check id must lie in 1.." + std::to_string(kCheckCount));
  const CheckInfo& info = kChecks[id - 1];
  CheckResult result;
  result.id = id;
  result.title = info.title;
  result.anchor = info.anchor;
  result.limit_seconds = info.limit_seconds;
  result.bound = info.own_bound == 0 ? 0 : std::min(info.own_bound, options.max_n);
  std::mt19937_64 rng(options.seed * 1000003 + static_cast<std::uint64_t>(id));

  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: check_examples(o); break;
      case 2: check_z_basis(o, result.bound); break;
      case 3: check_structure_constants(o, result.bound); break;
      case 4: check_membership(o, result.bound, rng); break;
      case 5: check_uniform(o, result.bound); break;
      case 6: check_rank2_formula(o, result.bound); break;
      case 7: check_recovery(o, result.bound); break;
      case 8: check_splits(o, result.bound, rng); break;
      case 9: check_hilbert(o, result.bound); break;
      case 10: check_loops_duality_coproduct(o, rng); break;
    }
  } catch (const Error& e) {
    o.expect(false, std::string("raised ") + std::string(to_string(e.kind())) + ": " + e.what());
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (result.seconds > result.limit_seconds) o.expect(false, "time limit exceeded");
  result.passed = o.passed;
  result.detail = o.detail.str();
  return result;
}

std::vector<CheckResult> run_all_checks(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCheckCount; ++id) out.push_back(run_check(id, options));
  return out;
}

std::string format_line(const CheckResult& r) {
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title;
  if (r.bound > 0) line << " (n<=" << r.bound << ")";
  line << " " << r.seconds << "s/" << r.limit_seconds << "s: " << r.detail;
  return line.str();
}

}  // namespace nqsym

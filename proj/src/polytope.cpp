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

#include "nqsym/polytope.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "nqsym/error.hpp"
#include "nqsym/rank2.hpp"

namespace nqsym {

namespace {

Block merged(const std::vector<Block>& blocks) {
  Block out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> sorted_bases(const Matroid& m) { return m.bases(); }

std::vector<Subset> set_union(const std::vector<Subset>& a, const std::vector<Subset>& b) {
  std::vector<Subset> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Subset> set_intersection(const std::vector<Subset>& a,
                                     const std::vector<Subset>& b) {
  std::vector<Subset> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset_of(const std::vector<Subset>& a, const std::vector<Subset>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string describe(const Rank2Representative& r) { return "M_" + r.lambda.to_string(); }

}  // namespace

Rank2Representative Rank2Representative::from_blocks(int n, std::vector<Block> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::stable_sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x.front() < y.front();
  });
  std::vector<int> sizes;
  for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
  return {n, Composition(std::move(sizes)), std::move(blocks)};
}

SplitResult split(const Composition& lambda, int s) {
  require(lambda.length() >= 2, "splits need at least two parts");
  require(s >= 1 && static_cast<std::size_t>(s) < lambda.length(),
          "split position must satisfy 1 <= s < length");
  const int n = lambda.weight();
  const auto blocks = interval_blocks(lambda);
  const auto first = static_cast<std::ptrdiff_t>(s);
  std::vector<Block> head(blocks.begin(), blocks.begin() + first);
  std::vector<Block> tail(blocks.begin() + first, blocks.end());
  const Block s_set = merged(head);
  const Block rest = merged(tail);
  const int a = static_cast<int>(s_set.size());

  std::vector<int> alpha{a};
  std::vector<int> beta;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    (i < static_cast<std::size_t>(s) ? beta : alpha).push_back(lambda[i]);
  beta.push_back(n - a);

  std::vector<Block> alpha_blocks{s_set};
  alpha_blocks.insert(alpha_blocks.end(), tail.begin(), tail.end());
  std::vector<Block> beta_blocks = head;
  beta_blocks.push_back(rest);

  SplitResult out;
  out.alpha = Composition(alpha);
  out.beta = Composition(beta);
  out.mu = Composition{a, n - a};
  out.certificate.S = s_set;
  out.certificate.parent = Rank2Representative::from_blocks(n, blocks);
  out.certificate.at_most_one = Rank2Representative::from_blocks(n, alpha_blocks);
  out.certificate.at_least_one = Rank2Representative::from_blocks(n, beta_blocks);
  return out;
}

SplitCheck check_split(const Composition& lambda, int s) {
  const SplitResult r = split(lambda, s);
  const int n = lambda.weight();
  const Matroid m_lambda = r.certificate.parent.matroid();
  const Matroid m_alpha = r.certificate.at_most_one.matroid();
  const Matroid m_beta = r.certificate.at_least_one.matroid();
  const auto blocks = interval_blocks(lambda);
  const Block rest = merged(std::vector<Block>(blocks.begin() + s, blocks.end()));
  const Matroid m_mu = rank2_from_blocks(n, {r.certificate.S, rest});

  const QSymElement f_lambda = qsym_of_matroid(m_lambda);
  const QSymElement f_alpha = qsym_of_matroid(m_alpha);
  const QSymElement f_beta = qsym_of_matroid(m_beta);
  const QSymElement f_mu = qsym_of_matroid(m_mu);

  SplitCheck check;
  check.f_identity = f_lambda == f_alpha + f_beta - f_mu;
  auto sum = mod_m2(f_alpha, n);
  const auto beta_class = mod_m2(f_beta, n);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += beta_class[i];
  check.modm2_additive = sum == mod_m2(f_lambda, n);
  check.union_of_bases =
      set_union(sorted_bases(m_alpha), sorted_bases(m_beta)) == sorted_bases(m_lambda);
  check.intersection_of_bases =
      set_intersection(sorted_bases(m_alpha), sorted_bases(m_beta)) == sorted_bases(m_mu);
  return check;
}

std::vector<Composition> full_split_to_length3(const Composition& lambda) {
  require(is_partition(lambda) && lambda.length() >= 3,
          "needs a partition with at least three parts");
  std::vector<Composition> out;
  Composition current = lambda;
  while (current.length() > 3) {
    SplitResult r = split(current, 2);
    out.push_back(sorted_decreasing(r.beta));
    current = sorted_decreasing(r.alpha);
  }
  out.push_back(current);
  return out;
}

std::vector<Composition> random_split_multiset(const Composition& lambda,
                                               std::mt19937_64& rng) {
  require(is_partition(lambda) && lambda.length() >= 3,
          "needs a partition with at least three parts");
  std::vector<Composition> pending{lambda};
  std::vector<Composition> out;
  std::bernoulli_distribution keep(0.25);
  while (!pending.empty()) {
    Composition item = pending.back();
    pending.pop_back();
    if (item.length() < 4 || keep(rng)) {
      out.push_back(item);
      continue;
    }
    std::vector<int> parts = item.parts();
    std::shuffle(parts.begin(), parts.end(), rng);
    std::uniform_int_distribution<int> position(2, static_cast<int>(parts.size()) - 2);
    SplitResult r = split(Composition(parts), position(rng));
    pending.push_back(sorted_decreasing(r.alpha));
    pending.push_back(sorted_decreasing(r.beta));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct GeomBuilder {
  int n;
  Composition lambda;
  std::vector<SplitCertificate> splits;

  // Blocks for each item, aligned with its parts.
  std::vector<std::vector<Block>> assign(const std::vector<std::vector<int>>& items) {
    if (items.size() == 1) {
      if (sorted_decreasing(Composition(items[0])) != lambda)
        fail(ErrorKind::Inconsistent, "a single class must equal lambda");
      std::vector<std::size_t> order(items[0].size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return items[0][x] > items[0][y];
      });
      std::vector<Block> blocks(items[0].size());
      int next = 1;
      for (std::size_t i : order)
        for (int j = 0; j < items[0][i]; ++j) blocks[i].push_back(next++);
      return {blocks};
    }

    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = i + 1; j < items.size(); ++j)
        for (std::size_t p = 0; p < items[i].size(); ++p) {
          const int k = items[i][p];
          if (k <= 1 || k >= n - 1) continue;
          for (std::size_t q = 0; q < items[j].size(); ++q)
            if (items[j][q] == n - k) return merge(items, i, p, j, q);
        }
    fail(ErrorKind::NoMatchingPair, "no pair of classes with parts k and n-k");
  }

  std::vector<std::vector<Block>> merge(const std::vector<std::vector<int>>& items,
                                        std::size_t i, std::size_t p, std::size_t j,
                                        std::size_t q) {
    const auto& mu = items[i];
    const auto& nu = items[j];
    std::vector<int> tau;
    for (std::size_t x = 0; x < mu.size(); ++x)
      if (x != p) tau.push_back(mu[x]);
    for (std::size_t x = 0; x < nu.size(); ++x)
      if (x != q) tau.push_back(nu[x]);

    std::vector<std::vector<int>> reduced;
    for (std::size_t x = 0; x < items.size(); ++x)
      if (x != i && x != j) reduced.push_back(items[x]);
    reduced.push_back(tau);
    auto sub = assign(reduced);
    const std::vector<Block> tau_blocks = sub.back();
    sub.pop_back();

    const std::size_t from_mu = mu.size() - 1;
    std::vector<Block> mu_origin(tau_blocks.begin(), tau_blocks.begin() + static_cast<std::ptrdiff_t>(from_mu));
    std::vector<Block> nu_origin(tau_blocks.begin() + static_cast<std::ptrdiff_t>(from_mu), tau_blocks.end());

    std::vector<Block> mu_blocks;
    for (std::size_t x = 0, t = 0; x < mu.size(); ++x)
      mu_blocks.push_back(x == p ? merged(nu_origin) : mu_origin[t++]);
    std::vector<Block> nu_blocks;
    for (std::size_t x = 0, t = 0; x < nu.size(); ++x)
      nu_blocks.push_back(x == q ? merged(mu_origin) : nu_origin[t++]);

    SplitCertificate cert;
    cert.S = merged(mu_origin);
    cert.parent = Rank2Representative::from_blocks(n, tau_blocks);
    cert.at_most_one = Rank2Representative::from_blocks(n, nu_blocks);
    cert.at_least_one = Rank2Representative::from_blocks(n, mu_blocks);
    splits.push_back(std::move(cert));

    std::vector<std::vector<Block>> out;
    for (std::size_t x = 0, t = 0; x < items.size(); ++x) {
      if (x == i)
        out.push_back(mu_blocks);
      else if (x == j)
        out.push_back(nu_blocks);
      else
        out.push_back(sub[t++]);
    }
    return out;
  }
};

}  // namespace

GeomDecomposition geom_decompose(const Composition& lambda,
                                 const std::vector<Composition>& J) {
  require(is_partition(lambda) && lambda.length() >= 3,
          "lambda must be a partition with at least three parts");
  require(!J.empty(), "J must be nonempty");
  const int n = lambda.weight();
  std::vector<Rational> total(static_cast<std::size_t>((n - 1) / 2));
  for (const auto& mu : J) {
    require(mu.weight() == n && mu.length() >= 3,
            "every class in J needs weight n and at least three parts");
    const auto c = mod_m2(rank2_qsym(sorted_decreasing(mu)), n);
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += c[i];
  }
  if (total != mod_m2(rank2_qsym(lambda), n))
    fail(ErrorKind::Inconsistent, "mod-m2 equality fails");

  GeomBuilder builder{n, lambda, {}};
  std::vector<std::vector<int>> items;
  for (const auto& mu : J) items.push_back(mu.parts());
  const auto blocks = builder.assign(items);

  GeomDecomposition out;
  out.root = Rank2Representative::from_blocks(n, interval_blocks(lambda));
  for (const auto& b : blocks) out.representatives.push_back(Rank2Representative::from_blocks(n, b));
  out.splits = std::move(builder.splits);

  std::vector<Matroid> parts;
  for (const auto& r : out.representatives) parts.push_back(r.matroid());
  VerificationResult v = verify_polytope_decomposition(out.root.matroid(), parts, out.splits);
  if (!v.ok) fail(ErrorKind::Inconsistent, "constructed decomposition fails: " + v.reason);
  return out;
}

VerificationResult verify_polytope_decomposition(
    const Matroid& parent, const std::vector<Matroid>& parts,
    const std::vector<SplitCertificate>& certificates) {
  auto failure = [](std::string reason) { return VerificationResult{false, std::move(reason)}; };
  const auto& all = parent.bases();
  std::vector<Subset> covered;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].ground_size() != parent.ground_size())
      return failure("part " + std::to_string(i) + " lives on a different ground set");
    if (!subset_of(parts[i].bases(), all))
      return failure("part " + std::to_string(i) + " has a basis outside the parent");
    covered = set_union(covered, parts[i].bases());
  }
  if (covered != all) return failure("parts do not cover every basis of the parent");

  for (std::size_t c = 0; c < certificates.size(); ++c) {
    const auto& cert = certificates[c];
    const Subset s = to_mask(cert.S);
    const Matroid low = cert.at_most_one.matroid();
    const Matroid high = cert.at_least_one.matroid();
    const std::string name = "split " + std::to_string(c) + " (" +
                             describe(cert.parent) + ")";
    for (Subset b : low.bases())
      if (std::popcount(b & s) > 1) return failure(name + ": a basis meets S twice");
    for (Subset b : high.bases())
      if (std::popcount(b & s) < 1) return failure(name + ": a basis misses S");
    if (set_union(low.bases(), high.bases()) != cert.parent.matroid().bases())
      return failure(name + ": halves do not cover the parent");
    std::vector<Subset> equality;
    for (Subset b : set_union(low.bases(), high.bases()))
      if (std::popcount(b & s) == 1) equality.push_back(b);
    if (set_intersection(low.bases(), high.bases()) != equality)
      return failure(name + ": halves do not meet in the hyperplane");
  }

  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      auto common = set_intersection(parts[i].bases(), parts[j].bases());
      if (!common.empty() && !satisfies_exchange(common))
        return failure("parts " + std::to_string(i) + " and " + std::to_string(j) +
                       " meet outside a matroid polytope");
    }
  return {true, ""};
}

HilbertReport hilbert_basis_check(int n) {
  require(n >= 3, "Hilbert basis check needs n >= 3");
  HilbertReport report;
  report.n = n;
  std::vector<Composition> gens;
  std::vector<std::vector<Rational>> coords;
  for (const auto& lambda : partitions_of(n))
    if (lambda.length() == 3) {
      gens.push_back(lambda);
      coords.push_back(mod_m2(rank2_qsym(lambda), n));
    }
  report.generators = gens.size();

  report.distinct = true;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (coords[i] == coords[j]) {
        report.distinct = false;
        report.failures.push_back(gens[i].to_string() + " and " + gens[j].to_string() +
                                  " share a class");
      }

  auto weight = [](const std::vector<Rational>& c) {
    return std::accumulate(c.begin(), c.end(), Rational(0));
  };
  report.indecomposable = true;
  for (const auto& c : coords)
    if (weight(c) < 1) {
      report.indecomposable = false;
      report.failures.push_back("a generator has coordinate sum below 1");
    }
  for (std::size_t t = 0; t < gens.size(); ++t) {
    const Rational w = weight(coords[t]);
    // Multisets of size m as nondecreasing index sequences.
    for (int m = 2; m <= w; ++m) {
      std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
      while (true) {
        ++report.multisets_checked;
        std::vector<Rational> sum(coords[t].size());
        for (std::size_t g : idx)
          for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += coords[g][k];
        if (sum == coords[t]) {
          report.indecomposable = false;
          report.failures.push_back(gens[t].to_string() + " is a sum of " +
                                    std::to_string(m) + " classes");
        }
        int pos = m - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == gens.size()) --pos;
        if (pos < 0) break;
        const std::size_t v = idx[static_cast<std::size_t>(pos)] + 1;
        for (int x = pos; x < m; ++x) idx[static_cast<std::size_t>(x)] = v;
      }
    }
  }

  report.longer_classes_decompose = true;
  for (const auto& lambda : partitions_of(n)) {
    if (lambda.length() <= 3) continue;
    std::vector<Rational> sum(static_cast<std::size_t>((n - 1) / 2));
    bool all_length3 = true;
    for (const auto& mu : full_split_to_length3(lambda)) {
      all_length3 = all_length3 && mu.length() == 3;
      const auto c = mod_m2(rank2_qsym(mu), n);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += c[k];
    }
    if (!all_length3 || sum != mod_m2(rank2_qsym(lambda), n)) {
      report.longer_classes_decompose = false;
      report.failures.push_back(lambda.to_string() + " does not decompose");
    }
  }
  return report;
}

}  // namespace nqsym

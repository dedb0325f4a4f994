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

#include <random>
#include <string>
#include <vector>

#include "nqsym/composition.hpp"
#include "nqsym/matroid.hpp"
#include "nqsym/set_partition.hpp"

namespace nqsym {

// A concrete rank two matroid on [n]: blocks[i] is the parallel class of
// size lambda[i]. Normalized with parts weakly decreasing.
struct Rank2Representative {
  int n = 0;
  Composition lambda;
  std::vector<Block> blocks;

  static Rank2Representative from_blocks(int n, std::vector<Block> blocks);
  Matroid matroid() const { return rank2_from_blocks(n, blocks); }
  friend bool operator==(const Rank2Representative&, const Rank2Representative&) = default;
};

// A hyperplane split of `parent` by sum_{i in S} x_i = 1: bases of
// `at_most_one` meet S at most once, bases of `at_least_one` at least once.
struct SplitCertificate {
  std::vector<int> S;
  Rank2Representative parent;
  Rank2Representative at_most_one;
  Rank2Representative at_least_one;
};

// Splitting the lambda-ordered interval representative at position s:
// a = lambda_1 + ... + lambda_s, alpha = (a, lambda_{s+1}, ...),
// beta = (lambda_1, ..., lambda_s, n - a), mu = (a, n - a).
struct SplitResult {
  Composition alpha;
  Composition beta;
  Composition mu;
  SplitCertificate certificate;  // at_most_one ~ alpha, at_least_one ~ beta
};

SplitResult split(const Composition& lambda, int s);

struct SplitCheck {
  bool f_identity = false;      // F(M_lambda) = F(M_alpha) + F(M_beta) - F(M_mu)
  bool modm2_additive = false;  // classes of alpha and beta add up to lambda's
  bool union_of_bases = false;  // B(alpha) cup B(beta) = B(lambda)
  bool intersection_of_bases = false;  // B(alpha) cap B(beta) = B(mu)
  bool ok() const {
    return f_identity && modm2_additive && union_of_bases && intersection_of_bases;
  }
};

SplitCheck check_split(const Composition& lambda, int s);

// Splits off (lambda_1, lambda_2, rest) repeatedly; the classes modulo m^2
// of the returned length-three partitions add up to that of lambda.
std::vector<Composition> full_split_to_length3(const Composition& lambda);

// A random multiset of partitions with at least three parts whose classes
// modulo m^2 add up to that of lambda, from random splits.
std::vector<Composition> random_split_multiset(const Composition& lambda,
                                               std::mt19937_64& rng);

struct GeomDecomposition {
  Rank2Representative root;
  std::vector<Rank2Representative> representatives;  // aligned with J
  std::vector<SplitCertificate> splits;              // root split first
};

// Representatives of the classes in J whose base polytopes decompose that
// of M_lambda, built by merging matching pairs. Throws
// ErrorKind::Inconsistent when the classes modulo m^2 do not add up and
// ErrorKind::NoMatchingPair when the merge gets stuck.
GeomDecomposition geom_decompose(const Composition& lambda,
                                 const std::vector<Composition>& J);

struct VerificationResult {
  bool ok = false;
  std::string reason;
};

VerificationResult verify_polytope_decomposition(
    const Matroid& parent, const std::vector<Matroid>& parts,
    const std::vector<SplitCertificate>& certificates);

struct HilbertReport {
  int n = 0;
  std::size_t generators = 0;
  std::size_t multisets_checked = 0;
  bool distinct = false;
  bool indecomposable = false;
  bool longer_classes_decompose = false;
  std::vector<std::string> failures;
  bool ok() const { return distinct && indecomposable && longer_classes_decompose; }
};

// Length-three classes of weight n are pairwise distinct modulo m^2, none is
// a sum of two or more of them, and every longer class is a sum of them.
// Every length-three class has coordinate sum 1, 2 or 3 and every generator
// at least 1, so sums of more than that many generators cannot match.
HilbertReport hilbert_basis_check(int n);

}  // namespace nqsym

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

// Generated by gen_frozen.py; do not edit.

#include <vector>

namespace frozen {

struct Term {
  std::vector<int> comp;
  long num;
  long den;
};

struct Entry {
  std::vector<int> key;
  std::vector<Term> terms;
};

// N_a in the L basis, |a| <= 5.
inline const std::vector<Entry> kNInL = {
    {{1}, {{{1}, 1, 1}}},
    {{1,1}, {{{1,1}, 1, 1}}},
    {{2}, {{{2}, 1, 1}, {{1,1}, 1, 1}}},
    {{1,1,1}, {{{1,2}, 1, 1}}},
    {{1,2}, {{{1,1,1}, 1, 1}, {{1,2}, 1, 1}}},
    {{2,1}, {{{2,1}, 1, 1}, {{1,1,1}, 1, 1}}},
    {{3}, {{{3}, 1, 1}, {{2,1}, 2, 1}, {{1,1,1}, 1, 1}, {{1,2}, 2, 1}}},
    {{1,1,1,1}, {{{1,2,1}, 1, 1}}},
    {{1,1,2}, {{{1,2,1}, 1, 1}, {{1,3}, 1, 1}}},
    {{1,2,1}, {{{1,1,2}, 1, 1}, {{1,3}, 1, 1}}},
    {{1,3}, {{{1,1,2}, 2, 1}, {{1,1,1,1}, 1, 1}, {{1,2,1}, 2, 1}, {{1,3}, 1, 1}}},
    {{2,1,1}, {{{2,2}, 1, 1}, {{1,1,2}, 1, 1}}},
    {{2,2}, {{{2,1,1}, 1, 1}, {{2,2}, 1, 1}, {{1,1,2}, 1, 1}, {{1,1,1,1}, 1, 1}}},
    {{3,1}, {{{3,1}, 1, 1}, {{2,1,1}, 2, 1}, {{1,1,1,1}, 1, 1}, {{1,2,1}, 2, 1}}},
    {{4}, {{{4}, 1, 1}, {{3,1}, 3, 1}, {{2,1,1}, 3, 1}, {{2,2}, 5, 1}, {{1,1,2}, 3, 1}, {{1,1,1,1}, 1, 1}, {{1,2,1}, 5, 1}, {{1,3}, 3, 1}}},
    {{1,1,1,1,1}, {{{1,2,2}, 1, 1}}},
    {{1,1,1,2}, {{{1,2,2}, 1, 1}, {{1,2,1,1}, 1, 1}}},
    {{1,1,2,1}, {{{1,2,1,1}, 1, 1}, {{1,3,1}, 1, 1}}},
    {{1,1,3}, {{{1,2,2}, 2, 1}, {{1,2,1,1}, 1, 1}, {{1,3,1}, 2, 1}, {{1,4}, 1, 1}}},
    {{1,2,1,1}, {{{1,1,2,1}, 1, 1}, {{1,3,1}, 1, 1}}},
    {{1,2,2}, {{{1,1,3}, 1, 1}, {{1,1,2,1}, 1, 1}, {{1,3,1}, 1, 1}, {{1,4}, 1, 1}}},
    {{1,3,1}, {{{1,1,3}, 2, 1}, {{1,1,1,2}, 1, 1}, {{1,2,2}, 2, 1}, {{1,4}, 1, 1}}},
    {{1,4}, {{{1,1,3}, 3, 1}, {{1,1,2,1}, 5, 1}, {{1,1,1,1,1}, 1, 1}, {{1,1,1,2}, 3, 1}, {{1,2,2}, 5, 1}, {{1,2,1,1}, 3, 1}, {{1,3,1}, 3, 1}, {{1,4}, 1, 1}}},
    {{2,1,1,1}, {{{2,2,1}, 1, 1}, {{1,1,2,1}, 1, 1}}},
    {{2,1,2}, {{{2,2,1}, 1, 1}, {{2,3}, 1, 1}, {{1,1,3}, 1, 1}, {{1,1,2,1}, 1, 1}}},
    {{2,2,1}, {{{2,1,2}, 1, 1}, {{2,3}, 1, 1}, {{1,1,3}, 1, 1}, {{1,1,1,2}, 1, 1}}},
    {{2,3}, {{{2,1,2}, 2, 1}, {{2,1,1,1}, 1, 1}, {{2,2,1}, 2, 1}, {{2,3}, 1, 1}, {{1,1,3}, 1, 1}, {{1,1,2,1}, 2, 1}, {{1,1,1,1,1}, 1, 1}, {{1,1,1,2}, 2, 1}}},
    {{3,1,1}, {{{3,2}, 1, 1}, {{2,1,2}, 2, 1}, {{1,1,1,2}, 1, 1}, {{1,2,2}, 2, 1}}},
    {{3,2}, {{{3,1,1}, 1, 1}, {{3,2}, 1, 1}, {{2,1,2}, 2, 1}, {{2,1,1,1}, 2, 1}, {{1,1,1,1,1}, 1, 1}, {{1,1,1,2}, 1, 1}, {{1,2,2}, 2, 1}, {{1,2,1,1}, 2, 1}}},
    {{4,1}, {{{4,1}, 1, 1}, {{3,1,1}, 3, 1}, {{2,1,1,1}, 3, 1}, {{2,2,1}, 5, 1}, {{1,1,2,1}, 3, 1}, {{1,1,1,1,1}, 1, 1}, {{1,2,1,1}, 5, 1}, {{1,3,1}, 3, 1}}},
    {{5}, {{{5}, 1, 1}, {{4,1}, 4, 1}, {{3,1,1}, 6, 1}, {{3,2}, 9, 1}, {{2,1,2}, 11, 1}, {{2,1,1,1}, 4, 1}, {{2,2,1}, 16, 1}, {{2,3}, 9, 1}, {{1,1,3}, 6, 1}, {{1,1,2,1}, 9, 1}, {{1,1,1,1,1}, 1, 1}, {{1,1,1,2}, 4, 1}, {{1,2,2}, 16, 1}, {{1,2,1,1}, 9, 1}, {{1,3,1}, 11, 1}, {{1,4}, 4, 1}}},
};

// N_a * N_b in the N basis for |a| + |b| <= 5; key is a followed by 0 and b.
inline const std::vector<Entry> kNProducts = {
    {{1,0,1}, {{{2}, 1, 1}}},
    {{1,0,1,1}, {{{2,1}, 1, 1}, {{1,1,1}, 1, 1}}},
    {{1,0,2}, {{{3}, 1, 1}}},
    {{1,1,0,1}, {{{2,1}, 1, 1}, {{1,1,1}, 1, 1}}},
    {{2,0,1}, {{{3}, 1, 1}}},
    {{1,0,1,1,1}, {{{2,1,1}, 1, 1}, {{1,1,2}, 1, 1}}},
    {{1,0,1,2}, {{{2,2}, 1, 1}, {{1,1,1,1}, 2, 1}, {{1,2,1}, 1, 1}}},
    {{1,0,2,1}, {{{3,1}, 1, 1}, {{2,1,1}, 1, 1}}},
    {{1,0,3}, {{{4}, 1, 1}}},
    {{1,1,0,1,1}, {{{2,2}, 1, 1}, {{1,1,1,1}, 2, 1}}},
    {{1,1,0,2}, {{{3,1}, 1, 1}, {{2,1,1}, 2, 1}, {{1,1,2}, 1, 1}}},
    {{2,0,1,1}, {{{3,1}, 1, 1}, {{2,1,1}, 2, 1}, {{1,1,2}, 1, 1}}},
    {{2,0,2}, {{{4}, 1, 1}}},
    {{1,1,1,0,1}, {{{2,1,1}, 1, 1}, {{1,1,2}, 1, 1}}},
    {{1,2,0,1}, {{{2,2}, 1, 1}, {{1,1,1,1}, 2, 1}, {{1,2,1}, 1, 1}}},
    {{2,1,0,1}, {{{3,1}, 1, 1}, {{2,1,1}, 1, 1}}},
    {{3,0,1}, {{{4}, 1, 1}}},
    {{1,0,1,1,1,1}, {{{2,1,1,1}, 1, 1}, {{1,1,2,1}, 1, 1}, {{1,1,1,1,1}, 1, 1}}},
    {{1,0,1,1,2}, {{{2,1,2}, 1, 1}, {{1,1,3}, 1, 1}}},
    {{1,0,1,2,1}, {{{2,2,1}, 1, 1}, {{1,1,1,1,1}, 2, 1}, {{1,2,2}, 1, 1}}},
    {{1,0,1,3}, {{{2,3}, 1, 1}, {{1,1,1,2}, 3, 1}, {{1,2,1,1}, 3, 1}, {{1,3,1}, 1, 1}}},
    {{1,0,2,1,1}, {{{3,1,1}, 1, 1}, {{2,1,2}, 1, 1}}},
    {{1,0,2,2}, {{{3,2}, 1, 1}, {{2,1,1,1}, 2, 1}, {{2,2,1}, 1, 1}}},
    {{1,0,3,1}, {{{4,1}, 1, 1}, {{3,1,1}, 1, 1}}},
    {{1,0,4}, {{{5}, 1, 1}}},
    {{1,1,0,1,1,1}, {{{2,1,1,1}, 1, 1}, {{2,2,1}, 1, 1}, {{1,1,2,1}, 1, 1}, {{1,1,1,1,1}, 2, 1}}},
    {{1,1,0,1,2}, {{{2,3}, 1, 1}, {{1,1,1,2}, 3, 1}, {{1,2,1,1}, 1, 1}}},
    {{1,1,0,2,1}, {{{3,2}, 1, 1}, {{2,1,1,1}, 3, 1}, {{1,1,2,1}, 1, 1}}},
    {{1,1,0,3}, {{{4,1}, 1, 1}, {{3,1,1}, 3, 1}, {{2,1,2}, 3, 1}, {{1,1,3}, 1, 1}}},
    {{2,0,1,1,1}, {{{3,1,1}, 1, 1}, {{2,1,2}, 2, 1}, {{1,1,3}, 1, 1}}},
    {{2,0,1,2}, {{{3,2}, 1, 1}, {{2,1,1,1}, 4, 1}, {{2,2,1}, 2, 1}, {{1,1,2,1}, 2, 1}, {{1,1,1,1,1}, 4, 1}, {{1,2,2}, 1, 1}}},
    {{2,0,2,1}, {{{4,1}, 1, 1}, {{3,1,1}, 2, 1}, {{2,1,2}, 1, 1}}},
    {{2,0,3}, {{{5}, 1, 1}}},
    {{1,1,1,0,1,1}, {{{2,1,1,1}, 1, 1}, {{2,2,1}, 1, 1}, {{1,1,2,1}, 1, 1}, {{1,1,1,1,1}, 2, 1}}},
    {{1,1,1,0,2}, {{{3,1,1}, 1, 1}, {{2,1,2}, 2, 1}, {{1,1,3}, 1, 1}}},
    {{1,2,0,1,1}, {{{2,3}, 1, 1}, {{1,1,1,2}, 3, 1}, {{1,2,1,1}, 1, 1}}},
    {{1,2,0,2}, {{{3,2}, 1, 1}, {{2,1,1,1}, 4, 1}, {{2,2,1}, 2, 1}, {{1,1,2,1}, 2, 1}, {{1,1,1,1,1}, 4, 1}, {{1,2,2}, 1, 1}}},
    {{2,1,0,1,1}, {{{3,2}, 1, 1}, {{2,1,1,1}, 3, 1}, {{1,1,2,1}, 1, 1}}},
    {{2,1,0,2}, {{{4,1}, 1, 1}, {{3,1,1}, 2, 1}, {{2,1,2}, 1, 1}}},
    {{3,0,1,1}, {{{4,1}, 1, 1}, {{3,1,1}, 3, 1}, {{2,1,2}, 3, 1}, {{1,1,3}, 1, 1}}},
    {{3,0,2}, {{{5}, 1, 1}}},
    {{1,1,1,1,0,1}, {{{2,1,1,1}, 1, 1}, {{1,1,2,1}, 1, 1}, {{1,1,1,1,1}, 1, 1}}},
    {{1,1,2,0,1}, {{{2,1,2}, 1, 1}, {{1,1,3}, 1, 1}}},
    {{1,2,1,0,1}, {{{2,2,1}, 1, 1}, {{1,1,1,1,1}, 2, 1}, {{1,2,2}, 1, 1}}},
    {{1,3,0,1}, {{{2,3}, 1, 1}, {{1,1,1,2}, 3, 1}, {{1,2,1,1}, 3, 1}, {{1,3,1}, 1, 1}}},
    {{2,1,1,0,1}, {{{3,1,1}, 1, 1}, {{2,1,2}, 1, 1}}},
    {{2,2,0,1}, {{{3,2}, 1, 1}, {{2,1,1,1}, 2, 1}, {{2,2,1}, 1, 1}}},
    {{3,1,0,1}, {{{4,1}, 1, 1}, {{3,1,1}, 1, 1}}},
    {{4,0,1}, {{{5}, 1, 1}}},
};

struct MatroidCase {
  const char* name;
  int n;
  std::vector<std::vector<int>> bases;
  std::vector<Term> f;  // N basis
};

inline const std::vector<MatroidCase> kMatroids = {
    {"U24", 4, {{1,2}, {1,3}, {1,4}, {2,3}, {2,4}, {3,4}}, {{{2,2}, 6, 1}}},
    {"coloop", 3, {{1,2}, {1,3}}, {{{2,1}, 2, 1}, {{1,1,1}, 2, 1}}},
    {"M211", 4, {{1,3}, {1,4}, {2,3}, {2,4}, {3,4}}, {{{2,2}, 5, 1}, {{1,1,1,1}, 4, 1}}},
    {"fan", 5, {{1,2,4}, {1,2,5}, {1,3,4}, {1,3,5}, {1,4,5}, {2,3,4}, {2,3,5}, {2,4,5}}, {{{3,2}, 8, 1}, {{2,1,1,1}, 12, 1}}},
    {"K4", 6, {{1,2,3}, {1,2,5}, {1,2,6}, {1,3,4}, {1,3,6}, {1,4,5}, {1,4,6}, {1,5,6}, {2,3,4}, {2,3,5}, {2,4,5}, {2,4,6}, {2,5,6}, {3,4,5}, {3,4,6}, {3,5,6}}, {{{3,3}, 16, 1}, {{2,1,1,2}, 36, 1}}},
};

}  // namespace frozen

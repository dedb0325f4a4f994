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

#include <cstdint>
#include <string>
#include <vector>

namespace nqsym {

struct VerifyOptions {
  // Degree bound; each check uses the smaller of this and its own bound.
  int max_n = 8;
  std::uint64_t seed = 1;
};

struct CheckResult {
  int id = 0;
  std::string title;
  std::string anchor;  // the statement being checked
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
  int bound = 0;  // degree bound actually used
};

constexpr int kCheckCount = 10;

// Runs check `id` (1..kCheckCount). A check fails when its identity fails
// or when it overruns its time limit.
CheckResult run_check(int id, const VerifyOptions& options);
std::vector<CheckResult> run_all_checks(const VerifyOptions& options);

// "PASS [3] title (1.23s / 120s) detail"
std::string format_line(const CheckResult& r);

}  // namespace nqsym

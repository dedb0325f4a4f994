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

// Runs the acceptance checks and prints one line per check.
//   acceptance [--check k] [--seed s]
// Exits nonzero when any selected check fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "nqsym/verify.hpp"

int main(int argc, char** argv) {
  nqsym::VerifyOptions options;
  options.max_n = 9;  // each check caps this at its own bound
  int only = 0;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--check") only = std::atoi(argv[i + 1]);
    else if (flag == "--seed") options.seed = std::strtoull(argv[i + 1], nullptr, 10);
  }
  bool ok = true;
  for (int id = 1; id <= nqsym::kCheckCount; ++id) {
    if (only != 0 && id != only) continue;
    const nqsym::CheckResult r = nqsym::run_check(id, options);
    std::cout << nqsym::format_line(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

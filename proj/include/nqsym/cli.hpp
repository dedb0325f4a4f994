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

#include <iosfwd>
#include <string>
#include <vector>

namespace nqsym {

// Exit codes of the command line tool.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitResourceLimit = 2;
constexpr int kExitVerifyFailed = 3;

// Runs one command; args excludes the program name. Errors are written to
// `out` as {"error":{"kind":..,"message":..}}.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace nqsym

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

#include "nqsym/error.hpp"

namespace nqsym {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::ResourceLimit: return "resource_limit";
    case ErrorKind::NotDivisible: return "not_divisible";
    case ErrorKind::NotRankTwo: return "not_rank_two";
    case ErrorKind::Inconsistent: return "inconsistent";
    case ErrorKind::NoMatchingPair: return "no_matching_pair";
  }
  return "unknown";
}

}  // namespace nqsym

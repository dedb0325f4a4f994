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

#include "nqsym/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "nqsym/error.hpp"

namespace nqsym {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) require(p >= 1, "composition parts must be positive");
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition Composition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "0") return Composition{};
  std::vector<int> parts;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      require(c >= '1' && c <= '9', "digit notation needs parts 1..9: " +
                                        std::string(text));
      parts.push_back(c - '0');
    }
    return Composition(std::move(parts));
  }
  while (!text.empty()) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    require(ec == std::errc() && ptr == token.data() + token.size(),
            "bad composition part: " + std::string(token));
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Composition(std::move(parts));
}

int Composition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::to_string() const {
  if (parts_.empty()) return "0";
  bool digits = std::all_of(parts_.begin(), parts_.end(),
                            [](int p) { return p < 10; });
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

int rank(const Composition& a) {
  int r = 0;
  for (std::size_t i = 0; i < a.length(); i += 2) r += a[i];
  return r;
}

int corank(const Composition& a) {
  int r = 0;
  for (std::size_t i = 1; i < a.length(); i += 2) r += a[i];
  return r;
}

std::vector<int> to_subset(const Composition& a) {
  std::vector<int> s;
  int partial = 0;
  for (std::size_t i = 0; i + 1 < a.length(); ++i) {
    partial += a[i];
    s.push_back(partial);
  }
  return s;
}

Composition from_subset(std::span<const int> subset, int n) {
  require(n >= 0, "weight must be nonnegative");
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "subset has repeated elements");
  if (n == 0) {
    require(sorted.empty(), "subset must be empty for weight 0");
    return Composition{};
  }
  std::vector<int> parts;
  int previous = 0;
  for (int s : sorted) {
    require(s >= 1 && s <= n - 1, "subset element outside [n-1]");
    parts.push_back(s - previous);
    previous = s;
  }
  parts.push_back(n - previous);
  return Composition(std::move(parts));
}

std::uint64_t subset_mask(const Composition& a) {
  require(a.weight() <= 64, "weight too large for a subset mask");
  std::uint64_t mask = 0;
  for (int s : to_subset(a)) mask |= std::uint64_t{1} << (s - 1);
  return mask;
}

Composition from_subset_mask(std::uint64_t mask, int n) {
  require(n >= 0 && n <= 64, "weight out of range for a subset mask");
  if (n == 0) return Composition{};
  std::vector<int> parts;
  int run = 1;
  for (int i = 1; i < n; ++i) {
    if (mask >> (i - 1) & 1) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

bool refines(const Composition& finer, const Composition& coarser) {
  if (finer.weight() != coarser.weight()) return false;
  auto fine = to_subset(finer);
  auto coarse = to_subset(coarser);
  return std::includes(fine.begin(), fine.end(), coarse.begin(), coarse.end());
}

Composition reversal(const Composition& a) {
  return Composition(std::vector<int>(a.parts().rbegin(), a.parts().rend()));
}

Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.begin(), b.end());
  return Composition(std::move(parts));
}

std::vector<int> binary_word(const Composition& a) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(a.weight()));
  for (std::size_t i = 0; i < a.length(); ++i)
    word.insert(word.end(), static_cast<std::size_t>(a[i]),
                static_cast<int>(i % 2));
  return word;
}

std::strong_ordering binary_word_compare(const Composition& a,
                                         const Composition& b) {
  require(a.weight() == b.weight(),
          "binary word order needs compositions of equal weight");
  // Walk both words position by position without materializing them.
  std::size_t ia = 0, ib = 0;
  int left_a = a.empty() ? 0 : a[0];
  int left_b = b.empty() ? 0 : b[0];
  const int n = a.weight();
  for (int pos = 0; pos < n; ++pos) {
    while (left_a == 0) left_a = a[++ia];
    while (left_b == 0) left_b = b[++ib];
    int da = static_cast<int>(ia % 2);
    int db = static_cast<int>(ib % 2);
    if (da != db) return da <=> db;
    --left_a;
    --left_b;
  }
  return std::strong_ordering::equal;
}

bool GradedBinaryWordLess::operator()(const Composition& a,
                                      const Composition& b) const {
  int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  return binary_word_compare(a, b) < 0;
}

namespace {

void append_compositions(int remaining, std::vector<int>& prefix,
                         std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    append_compositions(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

void append_partitions(int remaining, int max_part, std::vector<int>& prefix,
                       std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = std::min(remaining, max_part); first >= 1; --first) {
    prefix.push_back(first);
    append_partitions(remaining - first, first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions_of(int n, CompositionOrder order) {
  require(n >= 0, "weight must be nonnegative");
  std::vector<Composition> out;
  std::vector<int> prefix;
  append_compositions(n, prefix, out);  // lexicographic by construction
  if (order == CompositionOrder::BinaryWord)
    std::sort(out.begin(), out.end(), GradedBinaryWordLess{});
  return out;
}

std::vector<Composition> compositions_of_rank(int n, int r) {
  std::vector<Composition> out;
  for (auto& c : compositions_of(n))
    if (rank(c) == r) out.push_back(std::move(c));
  return out;
}

std::vector<Composition> partitions_of(int n) {
  require(n >= 0, "weight must be nonnegative");
  std::vector<Composition> out;
  std::vector<int> prefix;
  append_partitions(n, n, prefix, out);
  return out;
}

bool is_partition(const Composition& a) {
  return std::is_sorted(a.begin(), a.end(), std::greater<>{});
}

Composition sorted_decreasing(const Composition& a) {
  std::vector<int> parts = a.parts();
  std::sort(parts.begin(), parts.end(), std::greater<>{});
  return Composition(std::move(parts));
}

}  // namespace nqsym

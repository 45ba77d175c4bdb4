// Copyright 2026 The minimax-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "minimax/zoo.hpp"

#include <algorithm>

#include "minimax/errors.hpp"

namespace minimax::zoo {

namespace {

Index max_of(const IndexSet& xs) { return *std::max_element(xs.begin(), xs.end()); }

}  // namespace

GameOracle lng(TieRule tie) {
  OracleCapabilities caps;
  // Columns above max(rows) are beaten by nobody in the set.
  caps.col_scan_limit = [](const IndexSet& rows) { return max_of(rows) + 1; };
  if (tie == TieRule::kWeak) {
    // Rows at or above max(cols) all beat every column in the set.
    caps.row_scan_limit = [](const IndexSet& cols) { return max_of(cols); };
    caps.row_last_one = [](Index s) { return s; };
    return GameOracle("lng", [](Index s, Index t) { return s >= t; }, std::move(caps));
  }
  caps.row_scan_limit = [](const IndexSet& cols) { return max_of(cols) + 1; };
  caps.row_last_one = [](Index s) { return s - 1; };
  return GameOracle("lng-strict", [](Index s, Index t) { return s > t; }, std::move(caps));
}

GameOracle diagonal() {
  OracleCapabilities caps;
  caps.row_scan_limit = [](const IndexSet& cols) { return max_of(cols) + 1; };
  caps.col_scan_limit = [](const IndexSet& rows) { return max_of(rows) + 1; };
  caps.row_last_one = [](Index s) { return s; };
  return GameOracle("diagonal", [](Index s, Index t) { return s == t; }, std::move(caps));
}

GameOracle two_copies() {
  auto payoff = [](Index s, Index t) {
    const Index n = (s + 1) / 2;
    const Index k = (t + 1) / 2;
    const bool same_copy = (s % 2) == (t % 2);
    return same_copy ? k <= n : k == n;
  };
  OracleCapabilities caps;
  // Rows with n beyond every k in the set only see their own copy's prefix.
  caps.row_scan_limit = [](const IndexSet& cols) { return 2 * ((max_of(cols) + 1) / 2) + 2; };
  caps.col_scan_limit = [](const IndexSet& rows) { return 2 * ((max_of(rows) + 1) / 2) + 2; };
  caps.row_last_one = [](Index s) { return s % 2 == 1 ? s + 1 : s; };
  return GameOracle("two-copies", payoff, std::move(caps));
}

GameOracle family_game(const SetFamily& family, Index horizon) {
  auto members = std::make_shared<const std::vector<IndexSet>>(
      family.is_explicit() ? family.explicit_members() : family.members(horizon));
  if (members->empty()) throw DomainError("family_game needs a non-empty family");
  Index top = 0;
  for (const auto& m : *members) {
    if (!m.empty()) top = std::max(top, m.back());
  }
  OracleCapabilities caps;
  caps.row_count = members->size();
  caps.row_scan_limit = [members](const IndexSet&) { return members->size(); };
  caps.col_scan_limit = [top](const IndexSet&) { return top + 1; };
  caps.row_last_one = [members](Index s) {
    const auto& m = (*members)[s - 1];
    return m.empty() ? Index{0} : m.back();
  };
  auto payoff = [members](Index s, Index t) {
    if (s == 0 || s > members->size()) {
      throw DomainError("family game row " + std::to_string(s) + " out of range");
    }
    const auto& m = (*members)[s - 1];
    return std::binary_search(m.begin(), m.end(), t);
  };
  return GameOracle("family:" + family.name(), payoff, std::move(caps));
}

GameOracle tail_game() {
  OracleCapabilities caps;
  caps.row_scan_limit = [](const IndexSet& cols) { return max_of(cols); };
  caps.col_scan_limit = [](const IndexSet& rows) { return max_of(rows) + 1; };
  caps.row_last_one = [](Index v) { return v; };
  return GameOracle("tail", [](Index v, Index j) { return v >= j; }, std::move(caps));
}

GameOracle constant(bool bit) {
  OracleCapabilities caps;
  caps.row_scan_limit = [](const IndexSet&) { return Index{1}; };
  caps.col_scan_limit = [](const IndexSet&) { return Index{1}; };
  if (!bit) caps.row_last_one = [](Index) { return Index{0}; };
  return GameOracle(bit ? "const1" : "const0", [bit](Index, Index) { return bit; },
                    std::move(caps));
}

FiniteGame staircase_matrix(Index k) { return truncate(lng(), k, k); }

FiniteGame identity(Index k) { return truncate(diagonal(), k, k); }

FiniteGame matching_pennies() { return identity(2); }

GameOracle by_name(const std::string& name) {
  if (name == "lng") return lng();
  if (name == "lng-strict") return lng(TieRule::kStrict);
  if (name == "diagonal") return diagonal();
  if (name == "two-copies") return two_copies();
  if (name == "tail") return tail_game();
  if (name == "const0") return constant(false);
  if (name == "const1") return constant(true);
  throw DomainError("unknown zoo game \"" + name + "\"");
}

std::vector<std::string> names() {
  return {"lng", "lng-strict", "diagonal", "two-copies", "tail", "const0", "const1"};
}

}  // namespace minimax::zoo

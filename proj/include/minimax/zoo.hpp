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

#pragma once

#include <string>
#include <vector>

#include "minimax/core.hpp"
#include "minimax/set_family.hpp"

namespace minimax {

/// How the larger number game breaks ties.
enum class TieRule {
  kWeak,    // row s beats column t iff s >= t
  kStrict,  // row s beats column t iff s > t
};

namespace zoo {

/// Larger number game: the larger number wins, ties as given.
GameOracle lng(TieRule tie = TieRule::kWeak);

/// Infinite matching pennies: player 1 wins iff both pick the same number.
GameOracle diagonal();

/// Two interleaved copies of N as columns: C1 at odd, C2 at even indices
/// (element k of C1 is column 2k-1, of C2 column 2k). Row 2n-1 beats the
/// first n elements of C1 and the n-th element of C2; row 2n mirrors it.
GameOracle two_copies();

/// Rows are members of F in enumeration order; row A beats t iff t in A.
/// Predicate families are enumerated up to their ground-set bound.
GameOracle family_game(const SetFamily& family, Index horizon = SetFamily::kEnumerationBound);

/// Vertex v against edge E_j = {i : i >= j}: player 1 wins iff v >= j.
GameOracle tail_game();

/// Every entry equal to the given bit.
GameOracle constant(bool bit);

/// Full lower-triangular k x k matrix (the LNG truncation).
FiniteGame staircase_matrix(Index k);
FiniteGame identity(Index k);
FiniteGame matching_pennies();

/// Oracle lookup by CLI name: lng, lng-strict, diagonal, two-copies, tail,
/// const0, const1.
GameOracle by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace zoo
}  // namespace minimax

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

#include <optional>
#include <vector>

#include "minimax/core.hpp"
#include "minimax/set_family.hpp"
#include "minimax/zoo.hpp"

namespace minimax {

/// Rows s_1..s_k and columns t_1..t_k forming a full lower-triangular
/// submatrix: pi(s_i, t_j) = 1 iff i >= j (or i > j for the strict pattern).
struct StaircaseWitness {
  std::vector<Index> rows;
  std::vector<Index> cols;
  Index size() const { return rows.size(); }
};

bool is_staircase(const FiniteGame& game, const StaircaseWitness& w,
                  TieRule pattern = TieRule::kWeak);
bool is_staircase(const GameOracle& oracle, const StaircaseWitness& w,
                  TieRule pattern = TieRule::kWeak);

/// Largest side staircase_exact accepts.
inline constexpr Index kStaircaseExactBudget = 20;

/// Maximum staircase by depth-first search with a counting bound. The first
/// maximum found in lexicographic (column, row) order is returned.
StaircaseWitness staircase_exact(const FiniteGame& game, TieRule pattern = TieRule::kWeak);

struct GreedyStaircase {
  StaircaseWitness witness;
  bool stalled = false;
};

/// Alternating construction t_1, s_1, t_2, s_2, ...: t_k is the smallest
/// column in the window that no earlier row beats and that some row beats
/// together with t_1..t_{k-1}; s_k is the smallest such row.
GreedyStaircase staircase_greedy(const GameOracle& oracle, Index budget, Index window = 256);
GreedyStaircase staircase_greedy(const FiniteGame& game, Index budget);

/// Strictly ascending sequence of members.
struct Chain {
  std::vector<IndexSet> sets;
  Index size() const { return sets.size(); }
};

bool is_chain(const Chain& chain);

/// Longest chain among the members within horizon, as a longest path in the
/// containment order. Ties go to the lexicographically smallest sequence.
Chain longest_chain(const SetFamily& family, Index horizon);
Chain longest_chain(const std::vector<IndexSet>& members);

/// The family of column sets beaten by each row, one entry per row.
std::vector<IndexSet> beaten_sets(const FiniteGame& game);

/// Builds a staircase from an ascending chain of the game's downward-closed
/// row family: t_k is the smallest element of the chain's union that no
/// earlier s_j beats, s_k the smallest row beating the first chain member
/// containing t_1..t_k. Stops early when the union runs out.
StaircaseWitness chain_to_staircase(const FiniteGame& game, const Chain& chain);

/// Columns above this are refused by vc_dimension.
inline constexpr Index kVcColumnBudget = 24;
/// Memoized classes littlestone_dimension may visit.
inline constexpr std::size_t kLittlestoneStateBudget = std::size_t{1} << 20;

Index vc_dimension(const FiniteGame& game);
Index littlestone_dimension(const FiniteGame& game);
/// Maximum staircase size.
Index threshold_dimension(const FiniteGame& game);

/// Raw 0/1 counts per row and column.
///
/// The four flags read the counting conditions on a finite matrix: a count
/// is taken as bounded when it never exceeds the bound (by default half the
/// length of the line it is counted along). They are descriptive only.
struct RowColProfile {
  std::vector<Index> row_ones, row_zeros, col_ones, col_zeros;
  Index row_bound = 0;  // applied to row counts
  Index col_bound = 0;  // applied to column counts
  bool row_zeros_bounded = false;
  bool row_ones_bounded = false;
  bool col_zeros_bounded = false;
  bool col_ones_bounded = false;
};

RowColProfile row_col_profile(const FiniteGame& game, std::optional<Index> bound = std::nullopt);

}  // namespace minimax

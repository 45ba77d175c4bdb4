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

#include <cstddef>
#include <utility>

#include "minimax/core.hpp"

namespace minimax {

/// Largest row or column count solved exactly. Larger games raise
/// ResourceError; there is no floating-point fallback.
inline constexpr Index kMaxSolveDimension = 300;

struct SolveResult {
  Rational value;
  MixedStrategy p_opt;  // row player
  MixedStrategy q_opt;  // column player
  std::size_t iterations = 0;
};

/// Exact value and optimal strategies of a finite zero-sum game.
///
/// Solves  max 1'y  s.t. (A + 1) y <= 1, y >= 0  with Bland's rule. The
/// column strategy is y / 1'y and the row strategy comes from the duals of
/// the same run, so both sides of the certificate come out of one solve.
SolveResult solve(const FiniteGame& game);

/// True iff min_t pi(p_opt, t) == value == max_s pi(s, q_opt) exactly.
bool verify(const FiniteGame& game, const SolveResult& result);

/// Row maximizing pi(s, q); lowest index on ties.
std::pair<Index, Rational> best_pure_response(const FiniteGame& game, const MixedStrategy& q);

/// Best response over all rows of an oracle game, via the distinct row
/// patterns on supp(q). Returns the representative row index.
std::pair<Index, Rational> best_pure_response(const GameOracle& oracle, const MixedStrategy& q);

/// Column minimizing pi(p, t); lowest index on ties.
std::pair<Index, Rational> best_pure_reply(const FiniteGame& game, const MixedStrategy& p);

}  // namespace minimax

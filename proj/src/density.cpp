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

#include "minimax/density.hpp"

#include <algorithm>

#include "minimax/errors.hpp"

namespace minimax {

DensityReport density_report(const GameOracle& oracle, Index prefix, Index count) {
  if (prefix == 0) throw DomainError("prefix must be positive");
  if (count == 0) throw DomainError("count must be positive");
  DensityReport r;
  r.prefix = prefix;
  r.count = count;
  const Rational n(prefix);
  for (Index s = 1; s <= count; ++s) {
    Index ones = 0;
    for (Index t = 1; t <= prefix; ++t) ones += oracle.payoff(s, t) ? 1 : 0;
    r.row_estimates.push_back(Rational(ones) / n);
  }
  for (Index t = 1; t <= count; ++t) {
    Index ones = 0;
    for (Index s = 1; s <= prefix; ++s) ones += oracle.payoff(s, t) ? 1 : 0;
    r.col_estimates.push_back(Rational(ones) / n);
  }
  const Rational alpha = *std::max_element(r.row_estimates.begin(), r.row_estimates.end());
  const Rational beta = *std::min_element(r.col_estimates.begin(), r.col_estimates.end());
  if (alpha < beta) r.candidate = std::make_pair(alpha, beta);
  return r;
}

StaircaseWitness separation_witness(const FiniteGame& game) {
  if (game.rows() <= kStaircaseExactBudget && game.cols() <= kStaircaseExactBudget) {
    return staircase_exact(game);
  }
  if (!game.is_win_lose()) throw DomainError("game is not win-lose");
  return staircase_greedy(game, std::min(game.rows(), game.cols())).witness;
}

}  // namespace minimax

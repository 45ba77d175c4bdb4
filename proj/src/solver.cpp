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

#include "minimax/solver.hpp"

#include <map>

#include "minimax/errors.hpp"
#include "minimax/lp.hpp"

namespace minimax {

SolveResult solve(const FiniteGame& game) {
  const Index r = game.rows();
  const Index c = game.cols();
  if (r > kMaxSolveDimension || c > kMaxSolveDimension) {
    throw ResourceError("game " + std::to_string(r) + "x" + std::to_string(c) +
                        " exceeds the exact solver limit of " +
                        std::to_string(kMaxSolveDimension) + " per side");
  }
  // Shifting by one keeps every entry positive, so the value is too.
  MatrixXq shifted = game.payoff();
  for (Eigen::Index i = 0; i < shifted.rows(); ++i) {
    for (Eigen::Index j = 0; j < shifted.cols(); ++j) shifted(i, j) += 1;
  }
  const VectorXq ones_r = VectorXq::Constant(r, Rational(1));
  const VectorXq ones_c = VectorXq::Constant(c, Rational(1));
  const auto lp = lp::maximize<Rational>(shifted, ones_r, ones_c, lp::PivotRule::kBland);
  if (lp.status != lp::Status::kOptimal) {
    throw std::logic_error("game LP not optimal; the shifted program is always bounded");
  }
  std::map<Index, Rational> q, p;
  for (Index t = 0; t < c; ++t) {
    if (lp.primal(t) != 0) q.emplace(t + 1, lp.primal(t) / lp.objective);
  }
  for (Index s = 0; s < r; ++s) {
    if (lp.dual(s) != 0) p.emplace(s + 1, lp.dual(s) / lp.objective);
  }
  return SolveResult{Rational(1) / lp.objective - 1, MixedStrategy(std::move(p)),
                     MixedStrategy(std::move(q)), lp.iterations};
}

bool verify(const FiniteGame& game, const SolveResult& result) {
  if (result.p_opt.max_index() > game.rows() || result.q_opt.max_index() > game.cols()) {
    return false;
  }
  if (best_pure_reply(game, result.p_opt).second != result.value) return false;
  return best_pure_response(game, result.q_opt).second == result.value;
}

std::pair<Index, Rational> best_pure_response(const FiniteGame& game, const MixedStrategy& q) {
  if (q.max_index() > game.cols()) throw DomainError("strategy refers to a missing column");
  Index best = 0;
  Rational best_value = -1;
  for (Index s = 1; s <= game.rows(); ++s) {
    Rational v = 0;
    for (const auto& [t, w] : q.weights()) v += w * game(s, t);
    if (v > best_value) {
      best = s;
      best_value = std::move(v);
    }
  }
  return {best, best_value};
}

std::pair<Index, Rational> best_pure_reply(const FiniteGame& game, const MixedStrategy& p) {
  if (p.max_index() > game.rows()) throw DomainError("strategy refers to a missing row");
  Index best = 0;
  Rational best_value = 2;
  for (Index t = 1; t <= game.cols(); ++t) {
    Rational v = 0;
    for (const auto& [s, w] : p.weights()) v += w * game(s, t);
    if (v < best_value) {
      best = t;
      best_value = std::move(v);
    }
  }
  return {best, best_value};
}

std::pair<Index, Rational> best_pure_response(const GameOracle& oracle, const MixedStrategy& q) {
  const IndexSet cols = q.support();
  Index best = 0;
  Rational best_value = -1;
  for (const auto& pattern : oracle.distinct_row_patterns(cols)) {
    Rational v = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (pattern.bits[j]) v += q[cols[j]];
    }
    if (v > best_value) {
      best = pattern.representative;
      best_value = std::move(v);
    }
  }
  return {best, best_value};
}

}  // namespace minimax

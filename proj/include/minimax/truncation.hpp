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
#include <string>
#include <vector>

#include "minimax/core.hpp"
#include "minimax/solver.hpp"

namespace minimax {

/// Powers of two up to 64.
std::vector<Index> default_schedule();

/// V[n][m] = value(truncate(oracle, n, m)) over two increasing schedules.
/// Nondecreasing in n, nonincreasing in m.
struct ValueGrid {
  std::string oracle_name;
  std::vector<Index> row_schedule;
  std::vector<Index> col_schedule;
  MatrixXq values;
  /// cells[k][l] is the solve behind values(k, l).
  std::vector<std::vector<SolveResult>> cells;
};

/// Cells are independent; threads > 1 spreads them over worker threads and
/// the result does not depend on the thread count.
ValueGrid value_grid(const GameOracle& oracle, const std::vector<Index>& row_schedule,
                     const std::vector<Index>& col_schedule, unsigned threads = 1);

struct CellWitness {
  Index n = 0;
  Index m = 0;
  Rational value;
  MixedStrategy p = MixedStrategy::point(1);
  MixedStrategy q = MixedStrategy::point(1);
};

/// One-sided evidence about the two sides of the minimax equation.
///
/// upper_estimate is min over columns of max over rows (the inf-sup side).
/// lower_estimate tracks lambda_n = lim_m V[n][m] (the sup-inf side). When
/// the oracle's rows are all finite, each lambda_n is computed exactly by
/// extending m past every row's last one; otherwise it is read off the last
/// column for rows strictly inside the column horizon, which overestimates.
/// row_first / col_first read the grid in the two orders of limits, each
/// inner limit taken one schedule step past the outer index.
struct GapReport {
  Rational tol;
  Rational upper_estimate;
  Rational lower_estimate;
  bool lower_exact = false;
  std::vector<Rational> lambda;  // exact lambda_n per row schedule entry, if lower_exact
  Rational row_first;
  Rational col_first;
  bool converged = false;
  CellWitness upper_witness;
  CellWitness lower_witness;
};

/// converged: the last two diagonal cells differ by at most tol, and so do
/// the two estimates.
GapReport gap_report(const ValueGrid& grid, const Rational& tol);
/// Same, with exact lambda_n when the oracle advertises finite rows.
GapReport gap_report(const GameOracle& oracle, const ValueGrid& grid, const Rational& tol);

struct CoverResult {
  bool ok = false;
  Rational achieved_value;  // value of the reduced truncation on cols
  std::optional<MixedStrategy> p;  // over oracle rows, when ok
};

/// Finite-support p with pi(p, t) >= 1 - eps for every t in cols, found by
/// solving the reduced truncation; fails with the achieved value otherwise.
CoverResult cover_columns(const GameOracle& oracle, const IndexSet& cols, const Rational& eps);

struct ExtractionFailure {
  char player = 'p';  // which step failed
  Index step = 0;     // k of p^(k) or q^(k)
  Rational restricted_value;
};

/// Alternating sequence p^(1), q^(1), ..., q^(depth), p^(depth+1).
///
/// p^(1) is the point mass on row 1. Each q^(k) solves the game of all
/// columns against the rows used so far and must hold them to <= v_low; each
/// p^(k+1) solves all rows against the columns used so far and must reach
/// >= v_bar. Every step is re-checked exactly against the oracle.
struct ExtractionResult {
  bool ok = false;
  std::vector<MixedStrategy> p_steps;
  std::vector<MixedStrategy> q_steps;
  std::optional<ExtractionFailure> failure;

  IndexSet row_support() const;
  IndexSet col_support() const;
};

ExtractionResult extract_violating_core(const GameOracle& oracle, const Rational& v_low,
                                        const Rational& v_bar, Index depth);

/// Exact pi(p, t) and pi(s, q) against an oracle.
Rational oracle_payoff(const GameOracle& oracle, const MixedStrategy& p, Index t);
Rational oracle_payoff(const GameOracle& oracle, Index s, const MixedStrategy& q);

}  // namespace minimax

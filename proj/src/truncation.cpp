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

#include "minimax/truncation.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "minimax/errors.hpp"

namespace minimax {

namespace {

void check_schedule(const std::vector<Index>& schedule, const char* which) {
  if (schedule.empty()) throw DomainError(std::string(which) + " schedule is empty");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] == 0) throw DomainError(std::string(which) + " schedule must be positive");
    if (i > 0 && schedule[i] <= schedule[i - 1]) {
      throw DomainError(std::string(which) + " schedule must be strictly increasing");
    }
  }
}

Rational abs_diff(const Rational& a, const Rational& b) { return a > b ? a - b : b - a; }

CellWitness witness_at(const ValueGrid& grid, std::size_t k, std::size_t l) {
  const auto& cell = grid.cells[k][l];
  return CellWitness{grid.row_schedule[k], grid.col_schedule[l], cell.value, cell.p_opt,
                     cell.q_opt};
}

// Maps a strategy over a game's positions to the integer labels of those positions.
MixedStrategy relabel(const MixedStrategy& s, const std::vector<std::string>& labels) {
  std::map<Index, Rational> out;
  for (const auto& [i, w] : s.weights()) out[label_index(labels[i - 1])] += w;
  return MixedStrategy(std::move(out));
}

IndexSet union_support(const std::vector<MixedStrategy>& steps) {
  std::vector<Index> all;
  for (const auto& s : steps) {
    for (const auto& [i, w] : s.weights()) all.push_back(i);
  }
  return normalize_index_set(std::move(all));
}

}  // namespace

std::vector<Index> default_schedule() { return {1, 2, 4, 8, 16, 32, 64}; }

ValueGrid value_grid(const GameOracle& oracle, const std::vector<Index>& row_schedule,
                     const std::vector<Index>& col_schedule, unsigned threads) {
  check_schedule(row_schedule, "row");
  check_schedule(col_schedule, "column");
  const std::size_t rows = row_schedule.size();
  const std::size_t cols = col_schedule.size();
  std::vector<std::optional<SolveResult>> slots(rows * cols);

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::size_t error_cell = rows * cols;
  auto worker = [&] {
    for (std::size_t i = next++; i < rows * cols; i = next++) {
      try {
        slots[i] = solve(truncate(oracle, row_schedule[i / cols], col_schedule[i % cols]));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        // Keep the lowest failing cell so the report does not depend on scheduling.
        if (i < error_cell) {
          error_cell = i;
          error = std::current_exception();
        }
      }
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(threads, rows * cols));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }
  if (error) {
    const std::string where = "cell (" + std::to_string(row_schedule[error_cell / cols]) + ", " +
                              std::to_string(col_schedule[error_cell % cols]) + ")";
    try {
      std::rethrow_exception(error);
    } catch (const ResourceError& e) {
      throw ResourceError(where + ": " + e.what());
    }
  }

  ValueGrid grid;
  grid.oracle_name = oracle.name();
  grid.row_schedule = row_schedule;
  grid.col_schedule = col_schedule;
  grid.values.resize(rows, cols);
  grid.cells.assign(rows, {});
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t l = 0; l < cols; ++l) {
      grid.values(k, l) = slots[k * cols + l]->value;
      grid.cells[k].push_back(std::move(*slots[k * cols + l]));
    }
  }
  return grid;
}

GapReport gap_report(const ValueGrid& grid, const Rational& tol) {
  const std::size_t rows = grid.row_schedule.size();
  const std::size_t cols = grid.col_schedule.size();
  if (rows == 0 || cols == 0) throw DomainError("empty value grid");
  if (tol < 0) throw DomainError("tolerance must be nonnegative");
  GapReport r;
  r.tol = tol;

  // inf over m of sup over n.
  std::size_t best_k = 0, best_l = 0;
  for (std::size_t l = 0; l < cols; ++l) {
    std::size_t k_max = 0;
    for (std::size_t k = 1; k < rows; ++k) {
      if (grid.values(k, l) > grid.values(k_max, l)) k_max = k;
    }
    if (l == 0 || grid.values(k_max, l) < grid.values(best_k, best_l)) {
      best_k = k_max;
      best_l = l;
    }
  }
  r.upper_estimate = grid.values(best_k, best_l);
  r.upper_witness = witness_at(grid, best_k, best_l);

  // sup over n of the last column, restricted to rows strictly inside it.
  const std::size_t last = cols - 1;
  const Index m_last = grid.col_schedule[last];
  std::optional<std::size_t> low_k;
  for (std::size_t k = 0; k < rows; ++k) {
    if (grid.row_schedule[k] >= m_last) continue;
    if (!low_k || grid.values(k, last) > grid.values(*low_k, last)) low_k = k;
  }
  if (!low_k) {
    low_k = 0;
    for (std::size_t k = 1; k < rows; ++k) {
      if (grid.values(k, last) > grid.values(*low_k, last)) low_k = k;
    }
  }
  r.lower_estimate = grid.values(*low_k, last);
  r.lower_witness = witness_at(grid, *low_k, last);

  r.row_first = grid.values(rows >= 2 ? rows - 2 : 0, last);
  r.col_first = grid.values(rows - 1, cols >= 2 ? cols - 2 : 0);

  const std::size_t diag = std::min(rows, cols);
  bool stable = true;
  if (diag >= 2) {
    stable = abs_diff(grid.values(diag - 1, diag - 1), grid.values(diag - 2, diag - 2)) <= tol;
  }
  r.converged = stable && abs_diff(r.upper_estimate, r.lower_estimate) <= tol;
  return r;
}

GapReport gap_report(const GameOracle& oracle, const ValueGrid& grid, const Rational& tol) {
  GapReport r = gap_report(grid, tol);
  if (oracle.rows_all_finite() != true) return r;
  r.lower_exact = true;
  r.lambda.clear();
  Index reach = 0;
  Index scanned = 0;
  std::optional<CellWitness> best;
  for (Index n : grid.row_schedule) {
    for (; scanned < n; ++scanned) reach = std::max(reach, oracle.row_last_one(scanned + 1));
    // Column reach + 1 beats none of rows 1..n, and further columns cannot help them.
    const Index m = reach + 1;
    SolveResult cell = solve(truncate(oracle, n, m));
    r.lambda.push_back(cell.value);
    if (!best || cell.value > best->value) {
      best = CellWitness{n, m, cell.value, cell.p_opt, cell.q_opt};
    }
  }
  r.lower_estimate = best->value;
  r.lower_witness = *best;
  r.row_first = r.lambda.size() >= 2 ? r.lambda[r.lambda.size() - 2] : r.lambda.back();

  const std::size_t diag = std::min(grid.row_schedule.size(), grid.col_schedule.size());
  bool stable = true;
  if (diag >= 2) {
    stable = abs_diff(grid.values(diag - 1, diag - 1), grid.values(diag - 2, diag - 2)) <= tol;
  }
  r.converged = stable && abs_diff(r.upper_estimate, r.lower_estimate) <= tol;
  return r;
}

Rational oracle_payoff(const GameOracle& oracle, const MixedStrategy& p, Index t) {
  Rational v = 0;
  for (const auto& [s, w] : p.weights()) {
    if (oracle.payoff(s, t)) v += w;
  }
  return v;
}

Rational oracle_payoff(const GameOracle& oracle, Index s, const MixedStrategy& q) {
  Rational v = 0;
  for (const auto& [t, w] : q.weights()) {
    if (oracle.payoff(s, t)) v += w;
  }
  return v;
}

CoverResult cover_columns(const GameOracle& oracle, const IndexSet& cols, const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw DomainError("eps must lie strictly between 0 and 1");
  if (cols.empty()) throw DomainError("column set is empty");
  if (!oracle.has_row_patterns()) {
    throw UnsupportedCapability(oracle.name() + " does not enumerate row patterns");
  }
  const IndexSet c = normalize_index_set(cols);
  const FiniteGame game = reduced_truncation(oracle, c);
  const SolveResult sol = solve(game);
  CoverResult r;
  r.achieved_value = sol.value;
  if (sol.value < 1 - eps) return r;
  MixedStrategy p = relabel(sol.p_opt, game.row_labels());
  for (Index t : c) {
    if (oracle_payoff(oracle, p, t) < 1 - eps) {
      throw std::logic_error("cover strategy fails its own check");
    }
  }
  r.ok = true;
  r.p = std::move(p);
  return r;
}

IndexSet ExtractionResult::row_support() const { return union_support(p_steps); }
IndexSet ExtractionResult::col_support() const { return union_support(q_steps); }

ExtractionResult extract_violating_core(const GameOracle& oracle, const Rational& v_low,
                                        const Rational& v_bar, Index depth) {
  if (!(v_low < v_bar)) throw DomainError("v_low must be below v_bar");
  if (!oracle.has_row_patterns() || !oracle.has_col_patterns()) {
    throw UnsupportedCapability(oracle.name() + " does not enumerate both pattern kinds");
  }
  ExtractionResult r;
  r.p_steps.push_back(MixedStrategy::point(1));
  for (Index k = 1; k <= depth; ++k) {
    const IndexSet rows = r.row_support();
    const FiniteGame q_game = reduced_col_truncation(oracle, rows);
    const SolveResult q_sol = solve(q_game);
    if (q_sol.value > v_low) {
      r.failure = ExtractionFailure{'q', k, q_sol.value};
      return r;
    }
    MixedStrategy q = relabel(q_sol.q_opt, q_game.col_labels());
    for (Index s : rows) {
      if (oracle_payoff(oracle, s, q) > v_low) throw std::logic_error("q-step fails its check");
    }
    r.q_steps.push_back(std::move(q));

    const IndexSet cols = r.col_support();
    const FiniteGame p_game = reduced_truncation(oracle, cols);
    const SolveResult p_sol = solve(p_game);
    if (p_sol.value < v_bar) {
      r.failure = ExtractionFailure{'p', k + 1, p_sol.value};
      return r;
    }
    MixedStrategy p = relabel(p_sol.p_opt, p_game.row_labels());
    for (Index t : cols) {
      if (oracle_payoff(oracle, p, t) < v_bar) throw std::logic_error("p-step fails its check");
    }
    r.p_steps.push_back(std::move(p));
  }
  r.ok = true;
  return r;
}

}  // namespace minimax

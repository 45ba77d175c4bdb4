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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minimax/rational.hpp"

namespace minimax {

/// A finite zero-sum game with exact payoffs in [0,1].
///
/// Rows are player 1's pure strategies, columns player 2's. Public accessors
/// take 1-based indices. Labels are opaque, duplicate-free, and carried
/// through subgame/dualize so that witnesses can be traced back.
class FiniteGame {
 public:
  /// Labels default to "1".."n" and "1".."m".
  explicit FiniteGame(MatrixXq payoff);
  FiniteGame(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
             MatrixXq payoff);

  /// Convenience for 0/1 literals in code and tests.
  static FiniteGame from_bits(const std::vector<std::vector<int>>& bits);

  Index rows() const { return static_cast<Index>(payoff_.rows()); }
  Index cols() const { return static_cast<Index>(payoff_.cols()); }

  const Rational& operator()(Index s, Index t) const { return payoff_(s - 1, t - 1); }
  /// Entry as a bit; only meaningful for win-lose games.
  bool wins(Index s, Index t) const { return payoff_(s - 1, t - 1) != 0; }

  const MatrixXq& payoff() const { return payoff_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  bool is_win_lose() const { return win_lose_; }

  friend bool operator==(const FiniteGame& a, const FiniteGame& b);

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  MatrixXq payoff_;
  bool win_lose_ = true;
};

/// Finite-support probability vector over 1-based strategy indices.
/// Weights are strictly positive and sum to exactly one.
class MixedStrategy {
 public:
  explicit MixedStrategy(std::map<Index, Rational> weights);

  static MixedStrategy point(Index i);
  /// Uniform over 1..n.
  static MixedStrategy uniform(Index n);
  static MixedStrategy uniform_over(const IndexSet& support);
  /// Drops zero entries and rescales the rest to sum to one.
  static MixedStrategy normalized(const std::map<Index, Rational>& weights);

  const std::map<Index, Rational>& weights() const { return weights_; }
  IndexSet support() const;
  Index max_index() const { return weights_.rbegin()->first; }
  Rational operator[](Index i) const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  std::map<Index, Rational> weights_;
};

/// Expected payoff of p against q.
Rational pi_mix(const FiniteGame& game, const MixedStrategy& p, const MixedStrategy& q);
/// Expected payoff of pure row s against q.
Rational pi_mix(const FiniteGame& game, Index s, const MixedStrategy& q);
/// Expected payoff of p against pure column t.
Rational pi_mix(const FiniteGame& game, const MixedStrategy& p, Index t);

FiniteGame subgame(const FiniteGame& game, const IndexSet& rows, const IndexSet& cols);

/// Swaps the players: transpose and replace each payoff x by 1 - x.
FiniteGame dualize(const FiniteGame& game);

/// A bit vector over an ordered index set, with the lowest strategy index
/// realizing it.
struct Pattern {
  std::vector<bool> bits;
  Index representative = 0;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// Optional capabilities of a GameOracle.
///
/// A scan limit L for a finite index set X promises that every strategy above
/// L repeats the pattern (on X) of some strategy at or below L. That is what
/// makes truncations of an infinite game equivalent to finite games.
struct OracleCapabilities {
  std::function<Index(const IndexSet& cols)> row_scan_limit;
  std::function<Index(const IndexSet& rows)> col_scan_limit;
  /// Largest column beaten by a row (0 if none). Present iff every row has
  /// finitely many ones.
  std::function<Index(Index row)> row_last_one;
  std::optional<Index> row_count;
  std::optional<Index> col_count;
};

/// A countable win-lose game given intensionally by its payoff rule.
class GameOracle {
 public:
  using PayoffFn = std::function<bool(Index s, Index t)>;

  GameOracle(std::string name, PayoffFn payoff, OracleCapabilities caps = {});

  const std::string& name() const { return name_; }
  bool payoff(Index s, Index t) const { return payoff_(s, t); }

  std::optional<Index> row_count() const { return caps_.row_count; }
  std::optional<Index> col_count() const { return caps_.col_count; }

  bool has_row_patterns() const { return static_cast<bool>(caps_.row_scan_limit); }
  bool has_col_patterns() const { return static_cast<bool>(caps_.col_scan_limit); }
  /// The flag is absent when nothing is known.
  std::optional<bool> rows_all_finite() const;
  /// Throws UnsupportedCapability unless rows_all_finite() is true.
  Index row_last_one(Index s) const;

  std::vector<bool> row_pattern(Index s, const IndexSet& cols) const;
  std::vector<bool> col_pattern(const IndexSet& rows, Index t) const;

  /// Each achievable row pattern on cols exactly once, ordered by
  /// representative.
  std::vector<Pattern> distinct_row_patterns(const IndexSet& cols) const;
  std::vector<Pattern> distinct_col_patterns(const IndexSet& rows) const;

 private:
  std::string name_;
  PayoffFn payoff_;
  OracleCapabilities caps_;
};

/// payoff[i][j] = payoff_fn(i, j) for 1 <= i <= n, 1 <= j <= m.
FiniteGame truncate(const GameOracle& oracle, Index n, Index m);

/// Rows are the distinct achievable row patterns on cols, labeled by their
/// representative row index; columns are labeled by their index.
FiniteGame reduced_truncation(const GameOracle& oracle, const IndexSet& cols);
/// Dual counterpart: all columns against a finite row set.
FiniteGame reduced_col_truncation(const GameOracle& oracle, const IndexSet& rows);

/// Parses a label produced by truncate/reduced_truncation back to its index.
Index label_index(const std::string& label);

/// Sorted, duplicate-free, all entries >= 1.
IndexSet normalize_index_set(std::vector<Index> raw);

}  // namespace minimax

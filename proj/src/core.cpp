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

#include "minimax/core.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "minimax/errors.hpp"

namespace minimax {

namespace {

std::vector<std::string> default_labels(Index n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (Index i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

void require_unique(const std::vector<std::string>& labels, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw DomainError(std::string("duplicate ") + what + " label \"" + l + "\"");
    }
  }
}

}  // namespace

FiniteGame::FiniteGame(MatrixXq payoff)
    : FiniteGame(default_labels(static_cast<Index>(payoff.rows())),
                 default_labels(static_cast<Index>(payoff.cols())), MatrixXq(payoff)) {}

FiniteGame::FiniteGame(std::vector<std::string> row_labels,
                       std::vector<std::string> col_labels, MatrixXq payoff)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      payoff_(std::move(payoff)) {
  if (payoff_.rows() == 0 || payoff_.cols() == 0) {
    throw DomainError("a game needs at least one row and one column");
  }
  if (row_labels_.size() != static_cast<std::size_t>(payoff_.rows()) ||
      col_labels_.size() != static_cast<std::size_t>(payoff_.cols())) {
    throw DomainError("label count does not match payoff shape");
  }
  require_unique(row_labels_, "row");
  require_unique(col_labels_, "column");
  for (Eigen::Index i = 0; i < payoff_.rows(); ++i) {
    for (Eigen::Index j = 0; j < payoff_.cols(); ++j) {
      const Rational& x = payoff_(i, j);
      if (x < 0 || x > 1) {
        throw DomainError("payoff (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") = " + to_string(x) + " outside [0,1]");
      }
      if (x != 0 && x != 1) win_lose_ = false;
    }
  }
}

FiniteGame FiniteGame::from_bits(const std::vector<std::vector<int>>& bits) {
  if (bits.empty()) throw DomainError("empty matrix");
  MatrixXq m(bits.size(), bits.front().size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i].size() != bits.front().size()) throw DomainError("ragged matrix");
    for (std::size_t j = 0; j < bits[i].size(); ++j) m(i, j) = bits[i][j];
  }
  return FiniteGame(std::move(m));
}

bool operator==(const FiniteGame& a, const FiniteGame& b) {
  return a.row_labels_ == b.row_labels_ && a.col_labels_ == b.col_labels_ &&
         a.payoff_.rows() == b.payoff_.rows() && a.payoff_.cols() == b.payoff_.cols() &&
         a.payoff_ == b.payoff_;
}

MixedStrategy::MixedStrategy(std::map<Index, Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("mixed strategy with empty support");
  Rational total = 0;
  for (const auto& [i, w] : weights_) {
    if (i == 0) throw DomainError("strategy indices are 1-based; got 0");
    if (w <= 0) throw DomainError("non-positive weight " + to_string(w) + " at index " +
                                  std::to_string(i));
    total += w;
  }
  if (total != 1) throw DomainError("weights sum to " + to_string(total) + ", not 1");
}

MixedStrategy MixedStrategy::point(Index i) { return MixedStrategy({{i, Rational(1)}}); }

MixedStrategy MixedStrategy::uniform(Index n) {
  if (n == 0) throw DomainError("uniform over an empty set");
  std::map<Index, Rational> w;
  for (Index i = 1; i <= n; ++i) w.emplace(i, Rational(1, n));
  return MixedStrategy(std::move(w));
}

MixedStrategy MixedStrategy::uniform_over(const IndexSet& support) {
  if (support.empty()) throw DomainError("uniform over an empty set");
  std::map<Index, Rational> w;
  for (Index i : support) w.emplace(i, Rational(1, support.size()));
  if (w.size() != support.size()) throw DomainError("duplicate index in support");
  return MixedStrategy(std::move(w));
}

MixedStrategy MixedStrategy::normalized(const std::map<Index, Rational>& weights) {
  Rational total = 0;
  for (const auto& [i, w] : weights) {
    if (w < 0) throw DomainError("negative weight at index " + std::to_string(i));
    total += w;
  }
  if (total == 0) throw DomainError("cannot normalize an all-zero weight vector");
  std::map<Index, Rational> out;
  for (const auto& [i, w] : weights) {
    if (w != 0) out.emplace(i, w / total);
  }
  return MixedStrategy(std::move(out));
}

IndexSet MixedStrategy::support() const {
  IndexSet s;
  s.reserve(weights_.size());
  for (const auto& kv : weights_) s.push_back(kv.first);
  return s;
}

Rational MixedStrategy::operator[](Index i) const {
  auto it = weights_.find(i);
  return it == weights_.end() ? Rational(0) : it->second;
}

namespace {

void check_rows(const FiniteGame& g, const MixedStrategy& p) {
  if (p.max_index() > g.rows()) {
    throw DomainError("row index " + std::to_string(p.max_index()) + " out of range (game has " +
                      std::to_string(g.rows()) + " rows)");
  }
}

void check_cols(const FiniteGame& g, const MixedStrategy& q) {
  if (q.max_index() > g.cols()) {
    throw DomainError("column index " + std::to_string(q.max_index()) +
                      " out of range (game has " + std::to_string(g.cols()) + " columns)");
  }
}

}  // namespace

Rational pi_mix(const FiniteGame& game, const MixedStrategy& p, const MixedStrategy& q) {
  check_rows(game, p);
  check_cols(game, q);
  Rational total = 0;
  for (const auto& [s, ps] : p.weights()) {
    Rational row = 0;
    for (const auto& [t, qt] : q.weights()) row += qt * game(s, t);
    total += ps * row;
  }
  return total;
}

Rational pi_mix(const FiniteGame& game, Index s, const MixedStrategy& q) {
  return pi_mix(game, MixedStrategy::point(s), q);
}

Rational pi_mix(const FiniteGame& game, const MixedStrategy& p, Index t) {
  return pi_mix(game, p, MixedStrategy::point(t));
}

IndexSet normalize_index_set(std::vector<Index> raw) {
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  if (!raw.empty() && raw.front() == 0) throw DomainError("indices are 1-based; got 0");
  return raw;
}

FiniteGame subgame(const FiniteGame& game, const IndexSet& rows, const IndexSet& cols) {
  if (rows.empty() || cols.empty()) throw DomainError("subgame needs non-empty row and column sets");
  const IndexSet r = normalize_index_set(rows);
  const IndexSet c = normalize_index_set(cols);
  if (r.back() > game.rows() || c.back() > game.cols()) {
    throw DomainError("subgame index out of range");
  }
  MatrixXq m(r.size(), c.size());
  std::vector<std::string> rl, cl;
  for (std::size_t i = 0; i < r.size(); ++i) {
    rl.push_back(game.row_labels()[r[i] - 1]);
    for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = game(r[i], c[j]);
  }
  for (Index t : c) cl.push_back(game.col_labels()[t - 1]);
  return FiniteGame(std::move(rl), std::move(cl), std::move(m));
}

FiniteGame dualize(const FiniteGame& game) {
  MatrixXq m = game.payoff().transpose();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Rational(1) - m(i, j);
  }
  return FiniteGame(game.col_labels(), game.row_labels(), std::move(m));
}

GameOracle::GameOracle(std::string name, PayoffFn payoff, OracleCapabilities caps)
    : name_(std::move(name)), payoff_(std::move(payoff)), caps_(std::move(caps)) {
  if (!payoff_) throw DomainError("oracle \"" + name_ + "\" has no payoff function");
}

std::optional<bool> GameOracle::rows_all_finite() const {
  if (caps_.row_last_one) return true;
  return std::nullopt;
}

Index GameOracle::row_last_one(Index s) const {
  if (!caps_.row_last_one) throw UnsupportedCapability("row_last_one on oracle " + name_);
  return caps_.row_last_one(s);
}

std::vector<bool> GameOracle::row_pattern(Index s, const IndexSet& cols) const {
  std::vector<bool> bits;
  bits.reserve(cols.size());
  for (Index t : cols) bits.push_back(payoff_(s, t));
  return bits;
}

std::vector<bool> GameOracle::col_pattern(const IndexSet& rows, Index t) const {
  std::vector<bool> bits;
  bits.reserve(rows.size());
  for (Index s : rows) bits.push_back(payoff_(s, t));
  return bits;
}

std::vector<Pattern> GameOracle::distinct_row_patterns(const IndexSet& cols) const {
  if (!caps_.row_scan_limit) throw UnsupportedCapability("distinct_row_patterns on oracle " + name_);
  if (cols.empty()) throw DomainError("distinct_row_patterns needs a non-empty column set");
  Index limit = caps_.row_scan_limit(cols);
  if (caps_.row_count) limit = std::min(limit, *caps_.row_count);
  std::vector<Pattern> out;
  std::set<std::vector<bool>> seen;
  for (Index s = 1; s <= limit; ++s) {
    auto bits = row_pattern(s, cols);
    if (seen.insert(bits).second) out.push_back({std::move(bits), s});
  }
  return out;
}

std::vector<Pattern> GameOracle::distinct_col_patterns(const IndexSet& rows) const {
  if (!caps_.col_scan_limit) throw UnsupportedCapability("distinct_col_patterns on oracle " + name_);
  if (rows.empty()) throw DomainError("distinct_col_patterns needs a non-empty row set");
  Index limit = caps_.col_scan_limit(rows);
  if (caps_.col_count) limit = std::min(limit, *caps_.col_count);
  std::vector<Pattern> out;
  std::set<std::vector<bool>> seen;
  for (Index t = 1; t <= limit; ++t) {
    auto bits = col_pattern(rows, t);
    if (seen.insert(bits).second) out.push_back({std::move(bits), t});
  }
  return out;
}

FiniteGame truncate(const GameOracle& oracle, Index n, Index m) {
  if (n == 0 || m == 0) throw DomainError("truncation sizes must be >= 1");
  if (oracle.row_count() && n > *oracle.row_count()) {
    throw DomainError("oracle " + oracle.name() + " has only " +
                      std::to_string(*oracle.row_count()) + " rows");
  }
  if (oracle.col_count() && m > *oracle.col_count()) {
    throw DomainError("oracle " + oracle.name() + " has only " +
                      std::to_string(*oracle.col_count()) + " columns");
  }
  MatrixXq payoff(n, m);
  for (Index i = 1; i <= n; ++i) {
    for (Index j = 1; j <= m; ++j) payoff(i - 1, j - 1) = oracle.payoff(i, j) ? 1 : 0;
  }
  return FiniteGame(std::move(payoff));
}

FiniteGame reduced_truncation(const GameOracle& oracle, const IndexSet& cols) {
  const IndexSet c = normalize_index_set(cols);
  const auto patterns = oracle.distinct_row_patterns(c);
  MatrixXq payoff(patterns.size(), c.size());
  std::vector<std::string> rl, cl;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    rl.push_back(std::to_string(patterns[i].representative));
    for (std::size_t j = 0; j < c.size(); ++j) payoff(i, j) = patterns[i].bits[j] ? 1 : 0;
  }
  for (Index t : c) cl.push_back(std::to_string(t));
  return FiniteGame(std::move(rl), std::move(cl), std::move(payoff));
}

FiniteGame reduced_col_truncation(const GameOracle& oracle, const IndexSet& rows) {
  const IndexSet r = normalize_index_set(rows);
  const auto patterns = oracle.distinct_col_patterns(r);
  MatrixXq payoff(r.size(), patterns.size());
  std::vector<std::string> rl, cl;
  for (std::size_t j = 0; j < patterns.size(); ++j) {
    cl.push_back(std::to_string(patterns[j].representative));
    for (std::size_t i = 0; i < r.size(); ++i) payoff(i, j) = patterns[j].bits[i] ? 1 : 0;
  }
  for (Index s : r) rl.push_back(std::to_string(s));
  return FiniteGame(std::move(rl), std::move(cl), std::move(payoff));
}

Index label_index(const std::string& label) {
  if (label.empty() || label.find_first_not_of("0123456789") != std::string::npos) {
    throw DomainError("label \"" + label + "\" is not a strategy index");
  }
  return std::stoul(label);
}

}  // namespace minimax

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

#include "minimax/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

#include "minimax/errors.hpp"

namespace minimax {

namespace {

using Beats = std::function<bool(Index, Index)>;

bool check_pattern(const Beats& beats, const StaircaseWitness& w, TieRule pattern) {
  if (w.rows.size() != w.cols.size()) return false;
  const Index k = w.size();
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      const bool want = pattern == TieRule::kWeak ? i >= j : i > j;
      if (beats(w.rows[i], w.cols[j]) != want) return false;
    }
  }
  return true;
}

void require_win_lose(const FiniteGame& game) {
  if (!game.is_win_lose()) throw DomainError("game is not win-lose");
}

class StaircaseSearch {
 public:
  explicit StaircaseSearch(const FiniteGame& game)
      : rows_(game.rows()), cols_(game.cols()), row_ones_(rows_, 0), col_ones_(cols_, 0) {
    for (Index s = 0; s < rows_; ++s) {
      for (Index t = 0; t < cols_; ++t) {
        if (game.wins(s + 1, t + 1)) {
          row_ones_[s] |= bit(t);
          col_ones_[t] |= bit(s);
        }
      }
    }
    limit_ = static_cast<int>(std::min(rows_, cols_));
  }

  StaircaseWitness run() {
    dfs(all(rows_), all(cols_));
    StaircaseWitness w;
    for (Index s : best_rows_) w.rows.push_back(s + 1);
    for (Index t : best_cols_) w.cols.push_back(t + 1);
    return w;
  }

 private:
  static std::uint32_t bit(Index i) { return std::uint32_t{1} << i; }
  static std::uint32_t all(Index n) { return n == 32 ? ~0u : (std::uint32_t{1} << n) - 1; }

  // rows: candidates beating every chosen column; cols: candidates no chosen row beats.
  void dfs(std::uint32_t rows, std::uint32_t cols) {
    const int k = static_cast<int>(cur_rows_.size());
    if (k > static_cast<int>(best_rows_.size())) {
      best_rows_ = cur_rows_;
      best_cols_ = cur_cols_;
    }
    if (static_cast<int>(best_rows_.size()) == limit_) return;
    const int room = std::min(std::popcount(rows), std::popcount(cols));
    if (k + room <= static_cast<int>(best_rows_.size())) return;
    for (std::uint32_t c = cols; c != 0; c &= c - 1) {
      const Index t = std::countr_zero(c);
      const std::uint32_t beaters = rows & col_ones_[t];
      for (std::uint32_t r = beaters; r != 0; r &= r - 1) {
        const Index s = std::countr_zero(r);
        cur_rows_.push_back(s);
        cur_cols_.push_back(t);
        dfs(beaters & ~bit(s), cols & ~bit(t) & ~row_ones_[s]);
        cur_rows_.pop_back();
        cur_cols_.pop_back();
        if (static_cast<int>(best_rows_.size()) == limit_) return;
      }
    }
  }

  Index rows_, cols_;
  std::vector<std::uint32_t> row_ones_, col_ones_;
  int limit_ = 0;
  std::vector<Index> cur_rows_, cur_cols_, best_rows_, best_cols_;
};

GreedyStaircase greedy(const Beats& beats, Index row_limit, Index col_limit, Index budget) {
  GreedyStaircase g;
  auto& w = g.witness;
  while (w.size() < budget) {
    bool extended = false;
    for (Index t = 1; t <= col_limit && !extended; ++t) {
      bool beaten = false;
      for (Index s : w.rows) beaten = beaten || beats(s, t);
      if (beaten) continue;
      for (Index s = 1; s <= row_limit; ++s) {
        bool all = beats(s, t);
        for (std::size_t j = 0; all && j < w.cols.size(); ++j) all = beats(s, w.cols[j]);
        if (all) {
          w.cols.push_back(t);
          w.rows.push_back(s);
          extended = true;
          break;
        }
      }
    }
    if (!extended) {
      g.stalled = true;
      break;
    }
  }
  return g;
}

bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool is_staircase(const FiniteGame& game, const StaircaseWitness& w, TieRule pattern) {
  for (Index s : w.rows) {
    if (s < 1 || s > game.rows()) return false;
  }
  for (Index t : w.cols) {
    if (t < 1 || t > game.cols()) return false;
  }
  return check_pattern([&](Index s, Index t) { return game.wins(s, t); }, w, pattern);
}

bool is_staircase(const GameOracle& oracle, const StaircaseWitness& w, TieRule pattern) {
  return check_pattern([&](Index s, Index t) { return oracle.payoff(s, t); }, w, pattern);
}

StaircaseWitness staircase_exact(const FiniteGame& game, TieRule pattern) {
  require_win_lose(game);
  if (game.rows() > kStaircaseExactBudget || game.cols() > kStaircaseExactBudget) {
    throw ResourceError("exact staircase search is limited to " +
                        std::to_string(kStaircaseExactBudget) + " rows and columns");
  }
  if (pattern == TieRule::kWeak) return StaircaseSearch(game).run();
  // pi(s_i, t_j) = 1 iff i > j is the weak pattern of the dual with the roles swapped.
  const StaircaseWitness d = StaircaseSearch(dualize(game)).run();
  return StaircaseWitness{d.cols, d.rows};
}

GreedyStaircase staircase_greedy(const GameOracle& oracle, Index budget, Index window) {
  const Index rows = std::min(window, oracle.row_count().value_or(window));
  const Index cols = std::min(window, oracle.col_count().value_or(window));
  return greedy([&](Index s, Index t) { return oracle.payoff(s, t); }, rows, cols, budget);
}

GreedyStaircase staircase_greedy(const FiniteGame& game, Index budget) {
  require_win_lose(game);
  return greedy([&](Index s, Index t) { return game.wins(s, t); }, game.rows(), game.cols(),
                budget);
}

bool is_chain(const Chain& chain) {
  for (std::size_t i = 1; i < chain.sets.size(); ++i) {
    const auto& a = chain.sets[i - 1];
    const auto& b = chain.sets[i];
    if (a.size() >= b.size() || !is_subset(a, b)) return false;
  }
  return true;
}

Chain longest_chain(const SetFamily& family, Index horizon) {
  return longest_chain(family.members(horizon));
}

Chain longest_chain(const std::vector<IndexSet>& members) {
  std::vector<IndexSet> sets;
  for (const auto& m : members) sets.push_back(normalize_index_set(m));
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  const std::size_t n = sets.size();
  if (n == 0) return {};
  // from[i]: longest chain starting at sets[i], filled from the largest sets down.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sets[a].size() > sets[b].size(); });
  std::vector<std::size_t> from(n, 1), next(n, n);
  for (std::size_t i : order) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sets[j].size() <= sets[i].size() || !is_subset(sets[i], sets[j])) continue;
      if (from[j] + 1 > from[i]) {
        from[i] = from[j] + 1;
        next[i] = j;
      }
    }
  }
  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (from[i] > from[start]) start = i;
  }
  Chain chain;
  for (std::size_t i = start; i != n; i = next[i]) chain.sets.push_back(sets[i]);
  return chain;
}

std::vector<IndexSet> beaten_sets(const FiniteGame& game) {
  std::vector<IndexSet> out;
  for (Index s = 1; s <= game.rows(); ++s) {
    IndexSet b;
    for (Index t = 1; t <= game.cols(); ++t) {
      if (game.wins(s, t)) b.push_back(t);
    }
    out.push_back(std::move(b));
  }
  return out;
}

StaircaseWitness chain_to_staircase(const FiniteGame& game, const Chain& chain) {
  require_win_lose(game);
  if (!is_chain(chain)) throw DomainError("sets do not form a strict chain");
  const auto beaten = beaten_sets(game);
  IndexSet pool = chain.sets.empty() ? IndexSet{} : chain.sets.back();
  for (Index t : pool) {
    if (t < 1 || t > game.cols()) throw DomainError("chain mentions a missing column");
  }
  StaircaseWitness w;
  while (true) {
    std::optional<Index> t_next;
    for (Index t : pool) {
      bool beaten_before = false;
      for (Index s : w.rows) beaten_before = beaten_before || game.wins(s, t);
      if (!beaten_before) {
        t_next = t;
        break;
      }
    }
    if (!t_next) break;
    IndexSet chosen = w.cols;
    chosen.push_back(*t_next);
    std::sort(chosen.begin(), chosen.end());
    const IndexSet* holder = nullptr;
    for (const auto& a : chain.sets) {
      if (is_subset(chosen, a)) {
        holder = &a;
        break;
      }
    }
    std::optional<Index> s_next;
    for (Index s = 1; s <= game.rows() && holder; ++s) {
      if (is_subset(*holder, beaten[s - 1])) {
        s_next = s;
        break;
      }
    }
    if (!s_next) break;  // the chain is not inside the game's row family
    w.cols.push_back(*t_next);
    w.rows.push_back(*s_next);
  }
  return w;
}

Index vc_dimension(const FiniteGame& game) {
  require_win_lose(game);
  const Index m = game.cols();
  if (m > kVcColumnBudget) {
    throw ResourceError("vc_dimension is limited to " + std::to_string(kVcColumnBudget) +
                        " columns");
  }
  std::vector<std::uint32_t> rows;
  for (Index s = 1; s <= game.rows(); ++s) {
    std::uint32_t mask = 0;
    for (Index t = 1; t <= m; ++t) {
      if (game.wins(s, t)) mask |= std::uint32_t{1} << (t - 1);
    }
    rows.push_back(mask);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  Index d = 0;
  for (Index size = 1; size <= m && (std::size_t{1} << size) <= rows.size(); ++size) {
    bool shattered = false;
    // Gosper's hack over all column subsets of the given size.
    for (std::uint32_t sub = (std::uint32_t{1} << size) - 1; sub < (std::uint32_t{1} << m);) {
      std::set<std::uint32_t> seen;
      for (std::uint32_t r : rows) seen.insert(r & sub);
      if (seen.size() == (std::size_t{1} << size)) {
        shattered = true;
        break;
      }
      const std::uint32_t c = sub & -sub;
      const std::uint32_t r = sub + c;
      sub = (((r ^ sub) >> 2) / c) | r;
    }
    if (!shattered) break;
    d = size;
  }
  return d;
}

namespace {

class Littlestone {
 public:
  explicit Littlestone(Index cols) : cols_(cols) {}

  Index dim(const std::vector<std::uint64_t>& h) {
    if (h.size() <= 1) return 0;
    if (auto it = memo_.find(h); it != memo_.end()) return it->second;
    if (memo_.size() >= kLittlestoneStateBudget) {
      throw ResourceError("littlestone_dimension exceeded its state budget");
    }
    const Index cap = std::bit_width(h.size()) - 1;  // floor(log2 |h|)
    Index best = 0;
    for (Index c = 0; c < cols_ && best < cap; ++c) {
      std::vector<std::uint64_t> zero, one;
      for (std::uint64_t r : h) ((r >> c) & 1 ? one : zero).push_back(r);
      if (zero.empty() || one.empty()) continue;
      const auto& small = zero.size() <= one.size() ? zero : one;
      const auto& large = zero.size() <= one.size() ? one : zero;
      // The smaller side is cheaper and its dimension already caps the split.
      const Index a = dim(small);
      if (a + 1 <= best) continue;
      const Index b = dim(large);
      best = std::max(best, 1 + std::min(a, b));
    }
    memo_.emplace(h, best);
    return best;
  }

 private:
  Index cols_;
  std::map<std::vector<std::uint64_t>, Index> memo_;
};

}  // namespace

Index littlestone_dimension(const FiniteGame& game) {
  require_win_lose(game);
  if (game.cols() > 64) throw ResourceError("littlestone_dimension is limited to 64 columns");
  std::vector<std::uint64_t> rows;
  for (Index s = 1; s <= game.rows(); ++s) {
    std::uint64_t mask = 0;
    for (Index t = 1; t <= game.cols(); ++t) {
      if (game.wins(s, t)) mask |= std::uint64_t{1} << (t - 1);
    }
    rows.push_back(mask);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return Littlestone(game.cols()).dim(rows);
}

Index threshold_dimension(const FiniteGame& game) { return staircase_exact(game).size(); }

RowColProfile row_col_profile(const FiniteGame& game, std::optional<Index> bound) {
  RowColProfile p;
  p.row_ones.assign(game.rows(), 0);
  p.col_ones.assign(game.cols(), 0);
  for (Index s = 1; s <= game.rows(); ++s) {
    for (Index t = 1; t <= game.cols(); ++t) {
      if (game(s, t) == 1) {
        ++p.row_ones[s - 1];
        ++p.col_ones[t - 1];
      }
    }
  }
  for (Index s = 0; s < game.rows(); ++s) p.row_zeros.push_back(game.cols() - p.row_ones[s]);
  for (Index t = 0; t < game.cols(); ++t) p.col_zeros.push_back(game.rows() - p.col_ones[t]);
  p.row_bound = bound.value_or(game.cols() / 2);
  p.col_bound = bound.value_or(game.rows() / 2);
  auto within = [](const std::vector<Index>& v, Index b) {
    return std::all_of(v.begin(), v.end(), [b](Index x) { return x <= b; });
  };
  p.row_zeros_bounded = within(p.row_zeros, p.row_bound);
  p.row_ones_bounded = within(p.row_ones, p.row_bound);
  p.col_zeros_bounded = within(p.col_zeros, p.col_bound);
  p.col_ones_bounded = within(p.col_ones, p.col_bound);
  return p;
}

}  // namespace minimax

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

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "minimax/hypergraph.hpp"
#include "minimax/io.hpp"
#include "minimax/series.hpp"
#include "minimax/solver.hpp"
#include "minimax/structure.hpp"
#include "minimax/truncation.hpp"
#include "minimax/zoo.hpp"
#include "oracles.hpp"

using namespace minimax;

namespace {

std::vector<Index> through(Index n) {
  std::vector<Index> v;
  for (Index i = 1; i <= n; ++i) v.push_back(i);
  return v;
}

Rational mix_payoff(const GameOracle& o, const MixedStrategy& p, const MixedStrategy& q) {
  Rational total = 0;
  for (const auto& [t, w] : q.weights()) total += w * oracle_payoff(o, p, t);
  return total;
}

bool solver_exactness() {
  const auto start = std::chrono::steady_clock::now();
  for (Index k = 1; k <= 20; ++k) {
    const auto g = zoo::identity(k);
    const auto r = solve(g);
    if (r.value != Rational(1, k) || !verify(g, r)) return false;
  }
  const auto mp = zoo::matching_pennies();
  const auto r = solve(mp);
  if (r.value != Rational(1, 2) || !verify(mp, r)) return false;
  return std::chrono::steady_clock::now() - start < std::chrono::seconds(10);
}

bool lng_grid() {
  const auto sched = default_schedule();
  const auto grid = value_grid(zoo::lng(), sched, sched, 4);
  for (std::size_t k = 0; k < sched.size(); ++k) {
    for (std::size_t l = 0; l < sched.size(); ++l) {
      if (grid.values(k, l) != (sched[k] >= sched[l] ? 1 : 0)) return false;
    }
  }
  const auto gap = gap_report(grid, Rational(1, 100));
  return gap.row_first == 0 && gap.col_first == 1 && gap.lower_estimate == 0 &&
         gap.upper_estimate == 1 && !gap.converged;
}

bool diagonal_grid() {
  const auto sched = default_schedule();
  const auto grid = value_grid(zoo::diagonal(), sched, sched, 4);
  for (std::size_t k = 0; k < sched.size(); ++k) {
    for (std::size_t l = 0; l < sched.size(); ++l) {
      const Rational want = sched[l] <= sched[k] ? Rational(1, sched[l]) : Rational(0);
      if (grid.values(k, l) != want) return false;
    }
  }
  const auto gap = gap_report(grid, Rational(1, 32));
  return gap.converged && gap.upper_estimate <= Rational(1, 32) &&
         gap.lower_estimate <= Rational(1, 32);
}

bool two_copies() {
  const auto o = zoo::two_copies();
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    std::map<Index, Rational> w;
    const int k = 1 + rng() % 8;
    for (int j = 0; j < k; ++j) w[1 + rng() % 64] += Rational(1 + rng() % 16);
    if (best_pure_response(o, MixedStrategy::normalized(w)).second < Rational(1, 2)) return false;
  }
  const auto grid = value_grid(o, through(16), {1, 2, 4, 8}, 4);
  const auto gap = gap_report(o, grid, Rational(1, 100));
  if (!gap.lower_exact || gap.lambda.size() != 16) return false;
  for (const auto& l : gap.lambda) {
    if (l != 0) return false;
  }
  return true;
}

bool staircases() {
  for (Index n = 1; n <= 12; ++n) {
    if (staircase_exact(truncate(zoo::lng(), n, n)).size() != n) return false;
  }
  if (staircase_exact(zoo::identity(6)).size() != 1) return false;
  if (staircase_exact(FiniteGame(MatrixXq::Zero(5, 5))).size() != 0) return false;
  // Each convention detects the full staircase in its own game; across
  // conventions one row is lost.
  const auto weak = truncate(zoo::lng(TieRule::kWeak), 12, 12);
  const auto strict = truncate(zoo::lng(TieRule::kStrict), 12, 12);
  return staircase_exact(weak, TieRule::kWeak).size() == 12 &&
         staircase_exact(strict, TieRule::kStrict).size() == 12 &&
         staircase_exact(weak, TieRule::kStrict).size() == 11 &&
         staircase_exact(strict, TieRule::kWeak).size() == 11;
}

bool dimensions_agree(const oracle::Bits& b) {
  const auto g = FiniteGame::from_bits(b);
  const auto vc = vc_dimension(g);
  const auto ld = littlestone_dimension(g);
  return static_cast<int>(ld) == oracle::littlestone(b) &&
         static_cast<int>(threshold_dimension(g)) == oracle::staircase(b) &&
         static_cast<int>(vc) == oracle::vc(b) && vc <= ld;
}

bool dimensions() {
  for (Index n = 2; n <= 16; ++n) {
    if (vc_dimension(truncate(zoo::lng(), n, n)) != 1) return false;
  }
  for (int rows = 1; rows <= 4; ++rows) {
    for (int cols = 1; cols <= 4; ++cols) {
      const int cells = rows * cols;
      for (long mask = 0; mask < (1L << cells); ++mask) {
        oracle::Bits b(rows, std::vector<int>(cols));
        for (int k = 0; k < cells; ++k) b[k / cols][k % cols] = (mask >> k) & 1;
        if (!dimensions_agree(b)) return false;
      }
    }
  }
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    if (!dimensions_agree(oracle::bits_of(oracle::random_game(rng, 6, 6)))) return false;
  }
  return true;
}

bool extractor() {
  const auto o = zoo::lng();
  const Rational v_low = 0;
  const Rational v_bar = 1;
  const Index depth = 10;
  const auto r = extract_violating_core(o, v_low, v_bar, depth);
  if (!r.ok || r.q_steps.size() != depth || r.p_steps.size() != depth + 1) return false;
  for (std::size_t k = 0; k < depth; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      if (mix_payoff(o, r.p_steps[j], r.q_steps[k]) > v_low) return false;
      if (mix_payoff(o, r.p_steps[k + 1], r.q_steps[j]) < v_bar) return false;
    }
  }
  const auto rows = r.row_support();
  const auto cols = r.col_support();
  const auto core = subgame(truncate(o, rows.back(), cols.back()), rows, cols);
  return staircase_exact(core).size() >= depth;
}

bool hypergraphs() {
  const Hypergraph tri({"a", "b", "c"}, {{1, 2}, {2, 3}, {1, 3}});
  if (tau_star(tri).first != Rational(3, 2) || nu_star(tri).first != Rational(3, 2) ||
      solve(game_of_hypergraph(tri)).value != Rational(2, 3)) {
    return false;
  }
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const Index n = 1 + rng() % 8;
    const Index m = 1 + rng() % 8;
    std::vector<std::string> vs;
    for (Index v = 1; v <= n; ++v) vs.push_back("v" + std::to_string(v));
    std::vector<IndexSet> edges;
    for (Index j = 0; j < m; ++j) {
      IndexSet e;
      for (Index v = 1; v <= n; ++v) {
        if (rng() % 3 == 0) e.push_back(v);
      }
      if (e.empty()) e.push_back(1 + rng() % n);
      edges.push_back(e);
    }
    const Hypergraph h(vs, edges);
    const auto [tau, cover] = tau_star(h);
    const auto value = solve(game_of_hypergraph(h)).value;
    if (value != 1 / tau || value != 1 / nu_star(h).first) return false;
    if (strategy_to_cover(h, cover_to_strategy(cover), value) != cover) return false;
  }
  return true;
}

bool series_suite() {
  const auto mf = SetFamily::min_family();
  if (!check_premise(mf, Series::harmonic(), 10000).violations.empty()) return false;
  const auto fool = fooling_series(mf, Rational(1, 10), 1024);
  if (!fool.ok || fool.series->partial_sum(1024) != 10 ||
      !check_premise(mf, *fool.series, 1024).violations.empty()) {
    return false;
  }
  if (enforcing_constant_lower(SetFamily::even_odd_segments(), 32).value != 2) return false;
  Rational prev = -1;
  for (Index h : {4, 8, 16, 32}) {
    const auto c = enforcing_constant_lower(mf, h);
    if (c.unbounded || c.value <= prev) return false;
    prev = c.value;
  }
  return true;
}

bool monotone_grid(const ValueGrid& g) {
  for (Eigen::Index k = 0; k < g.values.rows(); ++k) {
    for (Eigen::Index l = 0; l < g.values.cols(); ++l) {
      if (k > 0 && g.values(k, l) < g.values(k - 1, l)) return false;
      if (l > 0 && g.values(k, l) > g.values(k, l - 1)) return false;
    }
  }
  return true;
}

bool monotonicity() {
  for (const auto& name : zoo::names()) {
    if (!monotone_grid(value_grid(zoo::by_name(name), through(16), through(16), 4))) return false;
  }
  std::mt19937_64 rng(10);
  for (int i = 0; i < 200; ++i) {
    const Index r = 1 + rng() % 5;
    const Index c = 1 + rng() % 5;
    const auto g = oracle::random_game(rng, r + 1, c + 1);
    const auto base = solve(subgame(g, through(r), through(c))).value;
    if (solve(subgame(g, through(r + 1), through(c))).value < base) return false;
    if (solve(subgame(g, through(r), through(c + 1))).value > base) return false;
    const auto text = io::write_game(g);
    if (io::write_game(io::read_game(text)) != text) return false;
  }
  const Hypergraph h({"a", "b", "c"}, {{1, 3}, {2}});
  const auto ht = io::write_hypergraph(h);
  if (io::write_hypergraph(io::read_hypergraph(ht)) != ht) return false;
  const auto fj = io::to_json(SetFamily::min_family(), 6);
  return io::dump(io::to_json(io::family_from_json(fj), 6)) == io::dump(fj);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"solver exactness", solver_exactness},
      {"larger number game grid", lng_grid},
      {"diagonal game grid", diagonal_grid},
      {"two copies", two_copies},
      {"staircase detection", staircases},
      {"dimensions", dimensions},
      {"extractor", extractor},
      {"hypergraph duality", hypergraphs},
      {"series", series_suite},
      {"monotonicity and round trips", monotonicity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    std::string note;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    if (!ok) ++failures;
    std::printf("%s %zu %s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                note.c_str());
  }
  return failures == 0 ? 0 : 1;
}

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

#include <functional>
#include <random>

#include "doctest.h"
#include "minimax/errors.hpp"
#include "minimax/structure.hpp"
#include "minimax/zoo.hpp"
#include "oracles.hpp"

using namespace minimax;

namespace {

std::vector<Index> iota(Index n) {
  std::vector<Index> v;
  for (Index i = 1; i <= n; ++i) v.push_back(i);
  return v;
}

FiniteGame all_patterns(Index k) {
  oracle::Bits b;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> row;
    for (Index t = 0; t < k; ++t) row.push_back((mask >> t) & 1);
    b.push_back(row);
  }
  return FiniteGame::from_bits(b);
}

// Length of the longest strict chain, by exhaustive extension.
std::size_t brute_chain(const std::vector<IndexSet>& sets) {
  std::function<std::size_t(const IndexSet&)> from = [&](const IndexSet& a) {
    std::size_t best = 1;
    for (const auto& b : sets) {
      if (b.size() > a.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        best = std::max(best, 1 + from(b));
      }
    }
    return best;
  };
  std::size_t best = 0;
  for (const auto& a : sets) best = std::max(best, from(a));
  return best;
}

}  // namespace

TEST_CASE("exact staircase examples") {
  for (Index n = 1; n <= 12; ++n) {
    const auto w = staircase_exact(truncate(zoo::lng(), n, n));
    CHECK(w.size() == n);
    CHECK(w.rows == iota(n));
    CHECK(w.cols == iota(n));
  }
  for (Index k = 1; k <= 10; ++k) CHECK(staircase_exact(zoo::identity(k)).size() == 1);
  CHECK(staircase_exact(FiniteGame::from_bits({{0, 0}, {0, 0}})).size() == 0);
  CHECK_THROWS_AS(staircase_exact(FiniteGame(MatrixXq::Zero(kStaircaseExactBudget + 1, 2))),
                  ResourceError);
  MatrixXq half(1, 1);
  half(0, 0) = Rational(1, 2);
  CHECK_THROWS_AS(staircase_exact(FiniteGame{half}), DomainError);
}

TEST_CASE("exhaustive small matrices against brute-force oracles") {
  for (Index rows = 1; rows <= 4; ++rows) {
    for (Index cols = 1; cols <= 4; ++cols) {
      const std::size_t cells = rows * cols;
      for (std::size_t mask = 0; mask < (std::size_t{1} << cells); ++mask) {
        oracle::Bits b(rows, std::vector<int>(cols));
        for (std::size_t k = 0; k < cells; ++k) b[k / cols][k % cols] = (mask >> k) & 1;
        const auto g = FiniteGame::from_bits(b);
        const auto w = staircase_exact(g);
        REQUIRE(is_staircase(g, w));
        REQUIRE(static_cast<int>(w.size()) == oracle::staircase(b));
        REQUIRE(static_cast<int>(vc_dimension(g)) == oracle::vc(b));
        REQUIRE(static_cast<int>(littlestone_dimension(g)) == oracle::littlestone(b));
        REQUIRE(vc_dimension(g) <= littlestone_dimension(g));
      }
    }
  }
}

TEST_CASE("random 6x6 matrices against brute-force oracles") {
  std::mt19937_64 rng(66);
  for (int i = 0; i < 50; ++i) {
    const auto g = oracle::random_game(rng, 6, 6);
    const auto b = oracle::bits_of(g);
    CHECK(static_cast<int>(threshold_dimension(g)) == oracle::staircase(b));
    CHECK(static_cast<int>(littlestone_dimension(g)) == oracle::littlestone(b));
    CHECK(static_cast<int>(vc_dimension(g)) == oracle::vc(b));
    CHECK(vc_dimension(g) <= littlestone_dimension(g));
  }
}

TEST_CASE("strict staircases") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto g = oracle::random_game(rng, 1 + rng() % 7, 1 + rng() % 7);
    const auto w = staircase_exact(g, TieRule::kStrict);
    CHECK(is_staircase(g, w, TieRule::kStrict));
    // A strict staircase of size k contains a weak one of size k - 1 and vice versa.
    const Index weak = staircase_exact(g).size();
    CHECK(w.size() <= weak + 1);
    CHECK(weak <= w.size() + 1);
  }
}

TEST_CASE("greedy staircase on finite games") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_game(rng, 8, 8);
    const auto gr = staircase_greedy(g, 8);
    CHECK(is_staircase(g, gr.witness));
    CHECK(gr.witness.size() <= staircase_exact(g).size());
  }
}

TEST_CASE("greedy staircase on zoo games") {
  const auto lng = staircase_greedy(zoo::lng(), 10);
  CHECK(lng.witness.size() == 10);
  CHECK_FALSE(lng.stalled);
  CHECK(is_staircase(zoo::lng(), lng.witness));
  const auto diag = staircase_greedy(zoo::diagonal(), 10);
  CHECK(diag.witness.size() == 1);
  CHECK(diag.stalled);
  // The first copy alone is a larger number game, so the construction does
  // not stall here.
  const auto tc = staircase_greedy(zoo::two_copies(), 10);
  CHECK(is_staircase(zoo::two_copies(), tc.witness));
  CHECK(tc.witness.size() == 10);
  for (Index t : tc.witness.cols) CHECK(t % 2 == 1);
  CHECK(staircase_greedy(zoo::constant(false), 5).witness.size() == 0);
}

TEST_CASE("longest chains") {
  CHECK(longest_chain({{1}, {1, 2}, {1, 2, 3}}).size() == 3);
  CHECK(longest_chain({{1}, {2}, {3}}).size() == 1);
  CHECK(longest_chain(std::vector<IndexSet>{}).size() == 0);
  const auto mf = SetFamily::min_family();
  const auto members = mf.members(8);
  const auto c = longest_chain(mf, 8);
  CHECK(is_chain(c));
  CHECK(c.size() == 4);
  CHECK(c.size() == brute_chain(members));
  for (const auto& a : c.sets) CHECK(mf.contains(a));
  const auto closure = SetFamily::downward_closure({{1, 2, 3}, {2, 5}});
  CHECK(longest_chain(closure, 5).size() == 4);  // includes the empty set
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    std::vector<IndexSet> sets;
    for (int k = 0; k < 8; ++k) {
      IndexSet s;
      for (Index e = 1; e <= 5; ++e) {
        if (rng() % 2) s.push_back(e);
      }
      sets.push_back(s);
    }
    const auto chain = longest_chain(sets);
    CHECK(is_chain(chain));
    CHECK(chain.size() == brute_chain(sets));
  }
}

TEST_CASE("chains to staircases") {
  const auto g = truncate(zoo::lng(), 8, 8);
  Chain c;
  for (Index k = 1; k <= 8; ++k) c.sets.push_back(iota(k));
  const auto w = chain_to_staircase(g, c);
  CHECK(is_staircase(g, w));
  CHECK(w.size() == 8);
  Chain single{{{1}}};
  CHECK(chain_to_staircase(g, single).size() == 1);
  // One row beating every column: a chain of length 4 yields a staircase of 1.
  const auto ones = FiniteGame::from_bits({{1, 1, 1, 1}});
  Chain four;
  for (Index k = 1; k <= 4; ++k) four.sets.push_back(iota(k));
  const auto w1 = chain_to_staircase(ones, four);
  CHECK(is_staircase(ones, w1));
  CHECK(w1.size() == 1);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto r = oracle::random_game(rng, 6, 6);
    const auto sets = beaten_sets(r);
    const auto chain = longest_chain(SetFamily::downward_closure(sets), 6);
    const auto cw = chain_to_staircase(r, chain);
    CHECK(is_staircase(r, cw));
    CHECK(cw.size() <= staircase_exact(r).size());
  }
}

TEST_CASE("dimension examples") {
  for (Index n = 2; n <= 16; ++n) {
    const auto g = truncate(zoo::lng(), n, n);
    CHECK(vc_dimension(g) == 1);
    Index log2 = 0;
    while ((Index{1} << (log2 + 1)) <= n) ++log2;
    CHECK(littlestone_dimension(g) == log2);
    CHECK(static_cast<int>(littlestone_dimension(g)) == oracle::littlestone(oracle::bits_of(g)));
    CHECK(threshold_dimension(g) == n);
  }
  for (Index k = 1; k <= 4; ++k) {
    const auto g = all_patterns(k);
    CHECK(vc_dimension(g) == k);
    CHECK(littlestone_dimension(g) == k);
  }
  CHECK(littlestone_dimension(FiniteGame::from_bits({{1, 0, 1}})) == 0);
  CHECK(vc_dimension(zoo::identity(5)) == 1);
  CHECK(littlestone_dimension(zoo::identity(5)) == 1);
  CHECK_THROWS_AS(vc_dimension(FiniteGame(MatrixXq::Zero(2, kVcColumnBudget + 1))), ResourceError);
  CHECK_THROWS_AS(littlestone_dimension(FiniteGame(MatrixXq::Zero(2, 65))), ResourceError);
  CHECK_THROWS_AS(threshold_dimension(FiniteGame(MatrixXq::Zero(kStaircaseExactBudget + 1, 2))),
                  ResourceError);
}

TEST_CASE("row and column profiles") {
  const auto p = row_col_profile(FiniteGame::from_bits({{1, 0, 0}, {1, 1, 0}}));
  CHECK(p.row_ones == std::vector<Index>{1, 2});
  CHECK(p.row_zeros == std::vector<Index>{2, 1});
  CHECK(p.col_ones == std::vector<Index>{2, 1, 0});
  CHECK(p.col_zeros == std::vector<Index>{0, 1, 2});
  CHECK(p.row_bound == 1);
  CHECK(p.col_bound == 1);
  CHECK_FALSE(p.row_ones_bounded);
  CHECK_FALSE(p.row_zeros_bounded);
  CHECK_FALSE(p.col_ones_bounded);
  CHECK_FALSE(p.col_zeros_bounded);
  const auto id = row_col_profile(zoo::identity(6));
  CHECK(id.row_ones_bounded);
  CHECK(id.col_ones_bounded);
  CHECK_FALSE(id.row_zeros_bounded);
  const auto b = row_col_profile(zoo::identity(6), 5);
  CHECK(b.row_zeros_bounded);
  CHECK(b.col_zeros_bounded);
}

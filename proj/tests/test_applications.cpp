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

#include <random>
#include <string>

#include "doctest.h"
#include "minimax/density.hpp"
#include "minimax/errors.hpp"
#include "minimax/hypergraph.hpp"
#include "minimax/series.hpp"
#include "minimax/solver.hpp"
#include "minimax/zoo.hpp"

using namespace minimax;

namespace {

Hypergraph triangle() { return Hypergraph({"a", "b", "c"}, {{1, 2}, {2, 3}, {1, 3}}); }

Hypergraph random_hypergraph(std::mt19937_64& rng) {
  const Index n = 1 + rng() % 6;
  const Index m = 1 + rng() % 6;
  std::vector<std::string> vs;
  for (Index v = 1; v <= n; ++v) vs.push_back("v" + std::to_string(v));
  std::vector<IndexSet> edges;
  for (Index j = 0; j < m; ++j) {
    IndexSet e;
    for (Index v = 1; v <= n; ++v) {
      if (rng() % 2) e.push_back(v);
    }
    if (e.empty()) e.push_back(1 + rng() % n);
    edges.push_back(e);
  }
  return Hypergraph(vs, edges);
}

}  // namespace

TEST_CASE("premise checks") {
  const auto init = check_premise(SetFamily::initial_segments(), Series::harmonic(), 4);
  CHECK(init.exhaustive);
  CHECK(init.violations == std::vector<IndexSet>{{1, 2}, {1, 2, 3}, {1, 2, 3, 4}});
  CHECK(init.max_sum == Rational(25, 12));
  const auto mf = check_premise(SetFamily::min_family(), Series::harmonic(), 10000);
  CHECK(mf.violations.empty());
  CHECK_FALSE(mf.exhaustive);
  CHECK(mf.max_sum <= 1);
  const auto small = check_premise(SetFamily::min_family(), Series::harmonic(), 12);
  CHECK(small.exhaustive);
  CHECK(small.violations.empty());
  const auto c = check_premise(SetFamily::even_odd_segments(), Series::constant(Rational(1, 2)), 6);
  CHECK(c.violations.size() == 2);  // {2,4,6} and {1,3,5}
  CHECK(c.max_sum == Rational(3, 2));
  CHECK_THROWS_AS(Series([](Index) { return Rational(-1); })(1), DomainError);
}

TEST_CASE("series basics") {
  CHECK(Series::harmonic().partial_sum(4) == Rational(25, 12));
  CHECK(Series::zero().partial_sum(100) == 0);
  CHECK(Series::from_terms({1, 2})(3) == 0);
  const auto b = blend({Series::from_terms({1}), Series::from_terms({0, 1})}, 3);
  CHECK(b.prefix(3) == std::vector<Rational>{Rational(1, 2), Rational(1, 4), 0});
}

TEST_CASE("fooling series") {
  const auto mf = SetFamily::min_family();
  const auto ok = fooling_series(mf, Rational(1, 10), 1024);
  REQUIRE(ok.ok);
  CHECK(ok.value == Rational(512, 5121));
  CHECK(ok.series->partial_sum(1024) == 10);
  CHECK(check_premise(mf, *ok.series, 1024).violations.empty());
  const auto short_h = fooling_series(mf, Rational(1, 10), 1000);
  CHECK_FALSE(short_h.ok);
  CHECK(short_h.value == Rational(512, 5097));
  CHECK_FALSE(short_h.series);
  const auto small = fooling_series(mf, Rational(1, 3), 16);
  REQUIRE(small.ok);
  CHECK(small.series->partial_sum(16) == 3);
  CHECK(check_premise(mf, *small.series, 16).violations.empty());
  CHECK_FALSE(fooling_series(SetFamily::initial_segments(), Rational(1, 10), 64).ok);
  const auto trivial = fooling_series(mf, 1, 8);
  REQUIRE(trivial.ok);
  CHECK(trivial.series->partial_sum(8) == 1);
}

TEST_CASE("enforcing constant") {
  const auto mf = SetFamily::min_family();
  CHECK(enforcing_constant_lower(mf, 4).value == Rational(5, 2));
  CHECK(enforcing_constant_lower(mf, 8).value == Rational(13, 4));
  CHECK(enforcing_constant_lower(mf, 16).value == Rational(33, 8));
  CHECK(enforcing_constant_lower(SetFamily::even_odd_segments(), 16).value == 2);
  CHECK(enforcing_constant_lower(SetFamily::initial_segments(), 16).value == 1);
  Rational prev = 0;
  for (Index h = 1; h <= 12; ++h) {
    const auto e = enforcing_constant_lower(mf, h);
    CHECK(e.value >= prev);
    CHECK(check_premise(mf, Series::from_terms(e.terms), h).violations.empty());
    prev = e.value;
  }
  const auto u = enforcing_constant_lower(SetFamily::explicit_sets({{1}}), 3);
  CHECK(u.unbounded);
  CHECK(u.uncovered == IndexSet{2, 3});
}

TEST_CASE("density reports") {
  const auto lng = density_report(zoo::lng(), 10000);
  CHECK(lng.row_estimates.back() == Rational(20, 10000));
  CHECK(lng.col_estimates.back() == Rational(10000 - 19, 10000));
  REQUIRE(lng.candidate);
  CHECK(lng.candidate->first == Rational(20, 10000));
  CHECK(lng.candidate->second == Rational(10000 - 19, 10000));
  const auto ones = density_report(zoo::constant(true), 100, 5);
  CHECK_FALSE(ones.candidate);
  const auto w = separation_witness(truncate(zoo::lng(), 30, 30));
  CHECK(is_staircase(zoo::lng(), w));
  CHECK(w.size() >= 20);
  CHECK(separation_witness(zoo::identity(4)).size() == 1);
}

TEST_CASE("hypergraph examples") {
  const auto t = triangle();
  CHECK(nu_star(t).first == Rational(3, 2));
  CHECK(tau_star(t).first == Rational(3, 2));
  CHECK(solve(game_of_hypergraph(t)).value == Rational(2, 3));
  const auto tail = Hypergraph::tail(5);
  CHECK(nu_star(tail).first == 1);
  CHECK(tau_star(tail).first == 1);
  const Hypergraph one({"x", "y"}, {{1, 2}});
  CHECK(tau_star(one).first == 1);
  CHECK(solve(game_of_hypergraph(one)).value == 1);
  const Hypergraph empty({"x"}, {});
  CHECK(nu_star(empty).first == 0);
  CHECK(tau_star(empty).first == 0);
  CHECK_THROWS_AS(game_of_hypergraph(empty), DomainError);
  CHECK_THROWS_AS(Hypergraph({"x"}, {{2}}), DomainError);
  CHECK_THROWS_AS(Hypergraph({"x"}, {{}}), DomainError);
  try {
    strategy_to_cover(t, MixedStrategy::point(1), 1);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("E2") != std::string::npos);
  }
}

TEST_CASE("random hypergraphs") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto h = random_hypergraph(rng);
    const auto [nu, matching] = nu_star(h);
    const auto [tau, cover] = tau_star(h);
    CHECK(nu == tau);
    CHECK(is_feasible(h, matching));
    CHECK(is_feasible(h, cover));
    CHECK(cover.size == tau);
    const auto r = solve(game_of_hypergraph(h));
    CHECK(r.value == 1 / tau);
    const auto p = cover_to_strategy(cover);
    CHECK(strategy_to_cover(h, p, r.value) == cover);
    const auto back = strategy_to_cover(h, r.p_opt, r.value);
    CHECK(is_feasible(h, back));
    CHECK(back.size == tau);
  }
}

TEST_CASE("two copies best responses") {
  std::mt19937_64 rng(5);
  const auto g = zoo::two_copies();
  for (int i = 0; i < 100; ++i) {
    std::map<Index, Rational> w;
    const int k = 1 + rng() % 6;
    for (int j = 0; j < k; ++j) w[1 + rng() % 40] += Rational(1 + rng() % 9);
    const auto q = MixedStrategy::normalized(w);
    CHECK(best_pure_response(g, q).second >= Rational(1, 2));
  }
}

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

#include "minimax/series.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <set>

#include "minimax/core.hpp"
#include "minimax/errors.hpp"
#include "minimax/lp.hpp"
#include "minimax/solver.hpp"

namespace minimax {

Series::Series(Generator terms, std::string name) : terms_(std::move(terms)), name_(std::move(name)) {
  if (!terms_) throw DomainError("series without a generator");
}

Series Series::from_terms(std::vector<Rational> terms, std::string name) {
  for (const auto& t : terms) {
    if (t < 0) throw DomainError("series terms must be nonnegative");
  }
  auto shared = std::make_shared<const std::vector<Rational>>(std::move(terms));
  return Series(
      [shared](Index i) { return i <= shared->size() ? (*shared)[i - 1] : Rational(0); },
      std::move(name));
}

Series Series::harmonic() {
  return Series([](Index i) { return Rational(1) / Rational(i); }, "harmonic");
}

Series Series::zero() {
  return Series([](Index) { return Rational(0); }, "zero");
}

Series Series::constant(const Rational& c) {
  if (c < 0) throw DomainError("series terms must be nonnegative");
  return Series([c](Index) { return c; }, "constant " + to_string(c));
}

Rational Series::operator()(Index i) const {
  if (i == 0) throw DomainError("series are indexed from 1");
  Rational t = terms_(i);
  if (t < 0) throw DomainError("series term " + std::to_string(i) + " is negative");
  return t;
}

std::vector<Rational> Series::prefix(Index n) const {
  std::vector<Rational> out;
  out.reserve(n);
  for (Index i = 1; i <= n; ++i) out.push_back((*this)(i));
  return out;
}

Rational Series::partial_sum(Index n) const {
  Rational s = 0;
  for (Index i = 1; i <= n; ++i) s += (*this)(i);
  return s;
}

PremiseCheck check_premise(const SetFamily& family, const Series& series, Index horizon) {
  const std::vector<Rational> w = series.prefix(horizon);
  PremiseCheck out;
  if (family.enumerable(horizon)) {
    for (const auto& a : family.members(horizon)) {
      Rational s = set_weight(a, w);
      if (s > out.max_sum) out.max_sum = s;
      if (s > 1) out.violations.push_back(a);
    }
    return out;
  }
  if (!family.has_heaviest()) {
    throw ResourceError("family " + family.name() + " can be neither enumerated nor searched at horizon " +
                        std::to_string(horizon));
  }
  out.exhaustive = false;
  const IndexSet a = family.heaviest_member(w);
  out.max_sum = set_weight(a, w);
  if (out.max_sum > 1) out.violations.push_back(a);
  return out;
}

Series blend(const std::vector<Series>& sequences, Index horizon) {
  std::vector<Rational> terms(horizon, Rational(0));
  Rational scale = 1;
  for (const auto& s : sequences) {
    scale /= 2;
    for (Index i = 1; i <= horizon; ++i) terms[i - 1] += s(i) * scale;
  }
  return Series::from_terms(std::move(terms), "blend");
}

namespace {

struct Block {
  Index first, last;
  Index size() const { return last - first + 1; }
};

std::vector<Block> column_blocks(Index horizon) {
  std::vector<Block> out;
  if (horizon <= kFoolingSingletonLimit) {
    for (Index i = 1; i <= horizon; ++i) out.push_back({i, i});
    return out;
  }
  for (Index lo = 1; lo <= horizon; lo *= 2) out.push_back({lo, std::min(2 * lo - 1, horizon)});
  return out;
}

std::vector<Rational> spread(const std::vector<Block>& blocks, const std::vector<Rational>& mass,
                             Index horizon) {
  std::vector<Rational> w(horizon, Rational(0));
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Rational each = mass[k] / Rational(blocks[k].size());
    for (Index i = blocks[k].first; i <= blocks[k].last; ++i) w[i - 1] = each;
  }
  return w;
}

}  // namespace

FoolingResult fooling_series(const SetFamily& family, const Rational& eps, Index horizon) {
  if (eps <= 0) throw DomainError("eps must be positive");
  if (horizon == 0) throw DomainError("horizon must be positive");
  const auto blocks = column_blocks(horizon);
  const std::size_t k_count = blocks.size();

  std::vector<IndexSet> rows;
  std::set<IndexSet> seen;
  auto add_row = [&](IndexSet a) {
    if (seen.insert(a).second) rows.push_back(std::move(a));
  };
  add_row(family.heaviest_member(
      std::vector<Rational>(horizon, Rational(1) / Rational(horizon))));

  FoolingResult out;
  std::vector<Rational> w;
  while (true) {
    if (rows.size() > kMaxSolveDimension) {
      throw ResourceError("fooling_series generated more than " +
                          std::to_string(kMaxSolveDimension) + " members");
    }
    MatrixXq payoff = MatrixXq::Zero(rows.size(), k_count);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t k = 0; k < k_count; ++k) {
        const auto lo = std::lower_bound(rows[r].begin(), rows[r].end(), blocks[k].first);
        const auto hi = std::upper_bound(rows[r].begin(), rows[r].end(), blocks[k].last);
        payoff(r, k) = Rational(hi - lo) / Rational(blocks[k].size());
      }
    }
    const SolveResult sol = solve(FiniteGame(std::move(payoff)));
    std::vector<Rational> mass(k_count, Rational(0));
    for (const auto& [k, q] : sol.q_opt.weights()) mass[k - 1] = q;
    w = spread(blocks, mass, horizon);
    IndexSet heaviest = family.heaviest_member(w);
    const Rational top = set_weight(heaviest, w);
    if (top <= sol.value) {
      out.value = sol.value;
      break;
    }
    add_row(std::move(heaviest));
  }
  out.rows_generated = rows.size();
  if (out.value > eps) return out;
  out.ok = true;
  for (auto& x : w) x /= eps;
  out.terms = w;
  out.series = Series::from_terms(std::move(w), "fooling");
  return out;
}

constexpr std::size_t kCutsPerRound = 8;

EnforcingBound enforcing_constant_lower(const SetFamily& family, Index horizon) {
  if (horizon == 0) throw DomainError("horizon must be positive");
  EnforcingBound out;
  std::vector<IndexSet> rows;
  std::set<IndexSet> seen;
  std::vector<Rational> unit(horizon, Rational(0));
  for (Index i = 1; i <= horizon; ++i) {
    unit[i - 1] = 1;
    IndexSet a = family.heaviest_member(unit);
    if (set_weight(a, unit) == 0) {
      out.uncovered.push_back(i);
    } else if (seen.insert(a).second) {
      rows.push_back(std::move(a));
    }
    unit[i - 1] = 0;
  }
  if (!out.uncovered.empty()) {
    out.unbounded = true;
    return out;
  }
  // After a strict decrease of the optimum, strictly slack cuts leave the
  // active set for a pool; pooled cuts come back when violated.
  std::vector<IndexSet> pool;
  std::optional<Rational> previous;
  const VectorXq ones_c = VectorXq::Constant(horizon, Rational(1));
  while (true) {
    ++out.rounds;
    MatrixXq a = MatrixXq::Zero(rows.size(), horizon);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (Index i : rows[r]) a(r, i - 1) = 1;
    }
    const VectorXq ones_r = VectorXq::Constant(rows.size(), Rational(1));
    const auto lp = lp::maximize<Rational>(a, ones_r, ones_c, lp::PivotRule::kDantzig);
    if (lp.status != lp::Status::kOptimal) {
      throw std::logic_error("covered constraint system must be bounded and feasible");
    }
    out.value = lp.objective;
    out.terms.assign(horizon, Rational(0));
    for (Index i = 0; i < horizon; ++i) out.terms[i] = lp.primal(i);

    std::vector<IndexSet> next;
    const bool decreased = !previous || out.value < *previous;
    previous = out.value;
    for (auto& cut : rows) {
      const bool slack = decreased && set_weight(cut, out.terms) < 1;
      (slack ? pool : next).push_back(std::move(cut));
    }
    std::vector<IndexSet> kept_pool;
    std::size_t added = 0;
    for (auto& cut : pool) {
      if (set_weight(cut, out.terms) > 1) {
        next.push_back(std::move(cut));
        ++added;
      } else {
        kept_pool.push_back(std::move(cut));
      }
    }
    pool = std::move(kept_pool);
    // Several oracle cuts per round: search again with the elements of each
    // cut zeroed, keeping whatever still exceeds 1 under the true weights.
    std::vector<Rational> masked = out.terms;
    for (std::size_t round = 0; round < kCutsPerRound; ++round) {
      IndexSet cut = family.heaviest_member(masked);
      if (set_weight(cut, out.terms) <= 1) break;
      for (Index i : cut) masked[i - 1] = 0;
      if (seen.insert(cut).second) {
        next.push_back(std::move(cut));
        ++added;
      }
    }
    rows = std::move(next);
    if (added == 0) break;
  }
  return out;
}

}  // namespace minimax

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
#include <optional>
#include <string>
#include <vector>

#include "minimax/rational.hpp"
#include "minimax/set_family.hpp"

namespace minimax {

/// A sequence of nonnegative rationals a_1, a_2, ...
class Series {
 public:
  using Generator = std::function<Rational(Index i)>;

  explicit Series(Generator terms, std::string name = "");
  /// Finitely many terms; a_i = 0 past the end.
  static Series from_terms(std::vector<Rational> terms, std::string name = "explicit");
  static Series harmonic();
  static Series zero();
  static Series constant(const Rational& c);

  /// Throws DomainError if the generator produces a negative term.
  Rational operator()(Index i) const;
  /// a_1..a_n.
  std::vector<Rational> prefix(Index n) const;
  Rational partial_sum(Index n) const;
  const std::string& name() const { return name_; }

 private:
  Generator terms_;
  std::string name_;
};

/// Members A (max A <= horizon) with sum_{i in A} a_i > 1.
///
/// Enumerable families are checked member by member. Otherwise only the
/// heaviest member is examined, so at most one violation is reported and
/// exhaustive is false; an empty list is still a proof that none exist.
struct PremiseCheck {
  std::vector<IndexSet> violations;
  Rational max_sum;
  bool exhaustive = true;
};

PremiseCheck check_premise(const SetFamily& family, const Series& series, Index horizon);

/// a_i = sum_n a_i^(n) / 2^n, over the given sequences in order.
Series blend(const std::vector<Series>& sequences, Index horizon);

/// Columns above this count use dyadic blocks in fooling_series.
inline constexpr Index kFoolingSingletonLimit = 64;

struct FoolingResult {
  bool ok = false;
  /// Value of the family game restricted to the search's column strategies:
  /// an upper bound on the truncated game value.
  Rational value;
  std::optional<Series> series;
  std::vector<Rational> terms;  // a_1..a_horizon when ok
  Index rows_generated = 0;
};

/// Player 2 mixes over {1..horizon}; a q holding every member to payoff
/// <= eps gives a_i = q_i / eps with total 1/eps and every member sum <= 1.
///
/// q is found by row generation: solve against the members seen so far, then
/// add the heaviest member under q until none beats the restricted value.
/// Up to kFoolingSingletonLimit the columns are single elements; beyond it q
/// is constant on the blocks [2^j, 2^(j+1)).
FoolingResult fooling_series(const SetFamily& family, const Rational& eps, Index horizon);

struct EnforcingBound {
  Rational value;   // max sum a_i over {1..horizon}; meaningless if unbounded
  bool unbounded = false;
  IndexSet uncovered;  // elements in no member
  std::vector<Rational> terms;
  Index rounds = 0;  // LP solves
};

/// max sum_{i <= horizon} a_i subject to sum_{i in A} a_i <= 1 for every
/// member within horizon, a >= 0, by constraint generation.
EnforcingBound enforcing_constant_lower(const SetFamily& family, Index horizon);

}  // namespace minimax

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
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "minimax/rational.hpp"

namespace minimax {

/// A family of finite sets of positive integers.
///
/// Families come in two membership modes. Explicit families list their
/// members. Predicate families decide membership by callback and are
/// enumerated lexicographically over subsets of {1..ground_bound}. The named
/// families additionally know how to find a heaviest member for given
/// nonnegative weights without enumerating, which is what lets them be used
/// at horizons in the thousands.
class SetFamily {
 public:
  using Predicate = std::function<bool(const IndexSet&)>;
  /// weights[i-1] is the weight of element i; returns a member within
  /// {1..weights.size()} of maximum total weight.
  using HeaviestFn = std::function<IndexSet(std::span<const Rational> weights)>;

  /// Largest ground set a predicate family will enumerate.
  static constexpr Index kEnumerationBound = 20;

  /// Members are normalized (sorted, deduplicated). If downward_closed is
  /// set, every non-empty subset of every member must be listed.
  static SetFamily explicit_sets(std::vector<IndexSet> sets, bool downward_closed = false,
                                 std::string name = "explicit");
  /// All subsets of the given sets.
  static SetFamily downward_closure(const std::vector<IndexSet>& sets,
                                    std::string name = "explicit-down");
  static SetFamily from_predicate(Predicate member, Index ground_bound, bool downward_closed,
                                  std::string name = "predicate");

  /// {1..k} for every k >= 1.
  static SetFamily initial_segments();
  /// Initial segments of the even and of the odd positive integers.
  static SetFamily even_odd_segments();
  /// Non-empty A with |A| <= min A.
  static SetFamily min_family();

  /// Named family lookup: "initial-segments", "even-odd-segments", "min-family".
  static SetFamily by_name(const std::string& name);

  const std::string& name() const;
  bool downward_closed() const;
  bool is_explicit() const;
  bool contains(const IndexSet& set) const;

  /// Whether members(horizon) is within the enumeration budget.
  bool enumerable(Index horizon) const;
  /// Members whose largest element is at most horizon, in lexicographic
  /// order. Throws ResourceError when not enumerable.
  std::vector<IndexSet> members(Index horizon) const;
  /// All members of an explicit family.
  const std::vector<IndexSet>& explicit_members() const;

  bool has_heaviest() const;
  /// Uses the closed-form search when available, otherwise enumerates.
  IndexSet heaviest_member(std::span<const Rational> weights) const;

 private:
  struct Impl;
  explicit SetFamily(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// Total weight of a set under weights indexed from 1.
Rational set_weight(const IndexSet& set, std::span<const Rational> weights);

}  // namespace minimax

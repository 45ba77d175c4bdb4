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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "minimax/core.hpp"

namespace minimax {

/// Finite hypergraph. Edges are sets of 1-based vertex positions.
class Hypergraph {
 public:
  /// Edges must be non-empty and refer to listed vertices.
  Hypergraph(std::vector<std::string> vertices, std::vector<IndexSet> edges);
  /// Vertices 1..n, edges E_j = {j..n}.
  static Hypergraph tail(Index n);

  Index vertex_count() const { return vertices_.size(); }
  Index edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<IndexSet>& edges() const { return edges_; }
  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<IndexSet> edges_;
};

/// Fractional matching (weights on edges) or cover (weights on vertices).
struct FractionalSolution {
  enum class Kind { kMatching, kCover };
  Kind kind = Kind::kCover;
  std::map<Index, Rational> weights;  // zero weights omitted
  Rational size;
  friend bool operator==(const FractionalSolution&, const FractionalSolution&) = default;
};

bool is_feasible(const Hypergraph& h, const FractionalSolution& f);

/// nu* by its own LP. No edges gives 0.
std::pair<Rational, FractionalSolution> nu_star(const Hypergraph& h);
/// tau* by its own LP. No edges gives 0.
std::pair<Rational, FractionalSolution> tau_star(const Hypergraph& h);

/// Rows are vertices, columns edges; player 1 wins iff v is in E.
FiniteGame game_of_hypergraph(const Hypergraph& h);

/// p_v = g(v) / |g|.
MixedStrategy cover_to_strategy(const FractionalSolution& cover);
/// g(v) = p_v / alpha. Throws DomainError naming the first edge where p
/// collects less than alpha.
FractionalSolution strategy_to_cover(const Hypergraph& h, const MixedStrategy& p,
                                     const Rational& alpha);

}  // namespace minimax

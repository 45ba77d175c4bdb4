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

#include <optional>
#include <utility>
#include <vector>

#include "minimax/core.hpp"
#include "minimax/structure.hpp"

namespace minimax {

/// Prefix densities (1/prefix) * sum_{i <= prefix} of rows and columns
/// 1..count. These estimate upper and lower asymptotic densities; a finite
/// prefix cannot decide either.
struct DensityReport {
  Index prefix = 0;
  Index count = 0;
  std::vector<Rational> row_estimates;  // of row upper densities
  std::vector<Rational> col_estimates;  // of column lower densities
  /// (max row estimate, min column estimate) when the first is smaller.
  std::optional<std::pair<Rational, Rational>> candidate;
};

DensityReport density_report(const GameOracle& oracle, Index prefix, Index count = 20);

/// Full lower-triangular submatrix of a win-lose game: exact search within
/// its budget, greedy beyond.
StaircaseWitness separation_witness(const FiniteGame& game);

}  // namespace minimax

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

#include <string>

#include "json.hpp"
#include "minimax/core.hpp"
#include "minimax/density.hpp"
#include "minimax/hypergraph.hpp"
#include "minimax/series.hpp"
#include "minimax/set_family.hpp"
#include "minimax/solver.hpp"
#include "minimax/structure.hpp"
#include "minimax/truncation.hpp"

namespace minimax::io {

using Json = nlohmann::json;

/// Lowest-terms "a/b", or "a" when integral.
Json to_json(const Rational& r);
/// Accepts "a/b" / "a" strings and JSON integers; field names the value in
/// error messages.
Rational rational_from_json(const Json& j, const std::string& field);

/// { "rows": [labels], "cols": [labels], "payoff": [["a/b", ...], ...] }
Json to_json(const FiniteGame& game);
FiniteGame game_from_json(const Json& j);

/// { "vertices": [labels], "edges": [[labels], ...] }
Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

/// { "name": ..., "sets": [[1, 2], ...], "downward_closed": bool }
Json to_json(const SetFamily& family, Index horizon);
SetFamily family_from_json(const Json& j);

/// Keyed by strategy index, or by label when labels are given.
Json to_json(const MixedStrategy& s, const std::vector<std::string>* labels = nullptr);
Json to_json(const FractionalSolution& f);
Json to_json(const StaircaseWitness& w);
Json to_json(const SolveResult& r, const FiniteGame& game);
Json to_json(const GapReport& r);
Json to_json(const ExtractionResult& r);
Json to_json(const DensityReport& r);

/// Header "n\m,m1,m2,..." then one line per row schedule entry.
std::string grid_to_csv(const ValueGrid& grid);

/// Pretty JSON with a trailing newline; stable bytes for equal values.
std::string dump(const Json& j);
Json parse(const std::string& text, const std::string& source);
Json load(const std::string& path);

std::string write_game(const FiniteGame& game);
FiniteGame read_game(const std::string& text);
std::string write_hypergraph(const Hypergraph& h);
Hypergraph read_hypergraph(const std::string& text);

}  // namespace minimax::io

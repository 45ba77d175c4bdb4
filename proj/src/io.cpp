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

#include "minimax/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "minimax/errors.hpp"

namespace minimax::io {

namespace {

std::string label_from_json(const Json& j, const std::string& field) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw DomainError(field + ": label must be a string or an integer");
}

std::vector<std::string> labels_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw DomainError(field + ": expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(label_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw DomainError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw DomainError(std::string("missing field \"") + key + "\"");
  return *it;
}

Json index_set_json(const IndexSet& s) {
  Json out = Json::array();
  for (Index i : s) out.push_back(i);
  return out;
}

Json witness_cell(const CellWitness& w) {
  return Json{{"n", w.n}, {"m", w.m}, {"value", to_json(w.value)},
              {"p", to_json(w.p)}, {"q", to_json(w.q)}};
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j, const std::string& field) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const DomainError& e) {
    throw DomainError(field + ": " + e.what());
  }
  throw DomainError(field + ": expected a rational string \"a/b\" or an integer");
}

Json to_json(const FiniteGame& game) {
  Json payoff = Json::array();
  for (Index s = 1; s <= game.rows(); ++s) {
    Json row = Json::array();
    for (Index t = 1; t <= game.cols(); ++t) row.push_back(to_json(game(s, t)));
    payoff.push_back(std::move(row));
  }
  return Json{{"rows", game.row_labels()}, {"cols", game.col_labels()}, {"payoff", payoff}};
}

FiniteGame game_from_json(const Json& j) {
  auto rows = labels_from_json(require(j, "rows"), "rows");
  auto cols = labels_from_json(require(j, "cols"), "cols");
  const Json& payoff = require(j, "payoff");
  if (!payoff.is_array() || payoff.size() != rows.size()) {
    throw DomainError("payoff: expected " + std::to_string(rows.size()) + " rows");
  }
  MatrixXq m(rows.size(), cols.size());
  for (std::size_t s = 0; s < rows.size(); ++s) {
    const std::string where = "payoff[" + std::to_string(s) + "]";
    if (!payoff[s].is_array() || payoff[s].size() != cols.size()) {
      throw DomainError(where + ": expected " + std::to_string(cols.size()) + " entries");
    }
    for (std::size_t t = 0; t < cols.size(); ++t) {
      m(s, t) = rational_from_json(payoff[s][t], where + "[" + std::to_string(t) + "]");
    }
  }
  return FiniteGame(std::move(rows), std::move(cols), std::move(m));
}

Json to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (const auto& e : h.edges()) {
    Json edge = Json::array();
    for (Index v : e) edge.push_back(h.vertices()[v - 1]);
    edges.push_back(std::move(edge));
  }
  return Json{{"vertices", h.vertices()}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  auto vertices = labels_from_json(require(j, "vertices"), "vertices");
  std::map<std::string, Index> position;
  for (std::size_t i = 0; i < vertices.size(); ++i) position.emplace(vertices[i], i + 1);
  const Json& edges = require(j, "edges");
  if (!edges.is_array()) throw DomainError("edges: expected an array");
  std::vector<IndexSet> sets;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string where = "edges[" + std::to_string(e) + "]";
    IndexSet set;
    for (const auto& label : labels_from_json(edges[e], where)) {
      auto it = position.find(label);
      if (it == position.end()) throw DomainError(where + ": unknown vertex \"" + label + "\"");
      set.push_back(it->second);
    }
    sets.push_back(std::move(set));
  }
  return Hypergraph(std::move(vertices), std::move(sets));
}

Json to_json(const SetFamily& family, Index horizon) {
  Json sets = Json::array();
  for (const auto& s : family.members(horizon)) sets.push_back(index_set_json(s));
  return Json{{"name", family.name()}, {"sets", sets},
              {"downward_closed", family.downward_closed()}};
}

SetFamily family_from_json(const Json& j) {
  const Json& sets = require(j, "sets");
  if (!sets.is_array()) throw DomainError("sets: expected an array");
  std::vector<IndexSet> members;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const std::string where = "sets[" + std::to_string(k) + "]";
    if (!sets[k].is_array()) throw DomainError(where + ": expected an array");
    IndexSet s;
    for (const auto& x : sets[k]) {
      if (!x.is_number_unsigned() || x.get<Index>() == 0) {
        throw DomainError(where + ": elements must be positive integers");
      }
      s.push_back(x.get<Index>());
    }
    members.push_back(std::move(s));
  }
  const bool down = j.contains("downward_closed") && j["downward_closed"].get<bool>();
  const std::string name = j.contains("name") ? j["name"].get<std::string>() : "file";
  return SetFamily::explicit_sets(std::move(members), down, name);
}

Json to_json(const MixedStrategy& s, const std::vector<std::string>* labels) {
  Json out = Json::object();
  for (const auto& [i, w] : s.weights()) {
    out[labels ? (*labels)[i - 1] : std::to_string(i)] = to_json(w);
  }
  return out;
}

Json to_json(const FractionalSolution& f) {
  Json weights = Json::object();
  for (const auto& [i, w] : f.weights) weights[std::to_string(i)] = to_json(w);
  return Json{{"kind", f.kind == FractionalSolution::Kind::kCover ? "cover" : "matching"},
              {"size", to_json(f.size)},
              {"weights", weights}};
}

Json to_json(const StaircaseWitness& w) {
  return Json{{"size", w.size()}, {"rows", w.rows}, {"cols", w.cols}};
}

Json to_json(const SolveResult& r, const FiniteGame& game) {
  return Json{{"value", to_json(r.value)},
              {"p", to_json(r.p_opt, &game.row_labels())},
              {"q", to_json(r.q_opt, &game.col_labels())},
              {"iterations", r.iterations}};
}

Json to_json(const GapReport& r) {
  Json lambda = Json::array();
  for (const auto& l : r.lambda) lambda.push_back(to_json(l));
  return Json{{"tol", to_json(r.tol)},
              {"upper_estimate", to_json(r.upper_estimate)},
              {"lower_estimate", to_json(r.lower_estimate)},
              {"lower_exact", r.lower_exact},
              {"lambda", lambda},
              {"row_first", to_json(r.row_first)},
              {"col_first", to_json(r.col_first)},
              {"converged", r.converged},
              {"upper_witness", witness_cell(r.upper_witness)},
              {"lower_witness", witness_cell(r.lower_witness)}};
}

Json to_json(const ExtractionResult& r) {
  Json p = Json::array(), q = Json::array();
  for (const auto& s : r.p_steps) p.push_back(to_json(s));
  for (const auto& s : r.q_steps) q.push_back(to_json(s));
  Json out{{"ok", r.ok},
           {"p_steps", p},
           {"q_steps", q},
           {"row_support", index_set_json(r.row_support())},
           {"col_support", index_set_json(r.col_support())}};
  if (r.failure) {
    out["failure"] = Json{{"player", std::string(1, r.failure->player)},
                          {"step", r.failure->step},
                          {"restricted_value", to_json(r.failure->restricted_value)}};
  } else {
    out["failure"] = nullptr;
  }
  return out;
}

Json to_json(const DensityReport& r) {
  Json rows = Json::array(), cols = Json::array();
  for (const auto& x : r.row_estimates) rows.push_back(to_json(x));
  for (const auto& x : r.col_estimates) cols.push_back(to_json(x));
  Json out{{"prefix", r.prefix}, {"count", r.count}, {"row_estimates", rows},
           {"col_estimates", cols}};
  if (r.candidate) {
    out["candidate"] = Json{{"alpha", to_json(r.candidate->first)},
                            {"beta", to_json(r.candidate->second)}};
  } else {
    out["candidate"] = nullptr;
  }
  out["note"] = "prefix averages estimate upper/lower asymptotic densities; they do not bound them";
  return out;
}

std::string grid_to_csv(const ValueGrid& grid) {
  std::ostringstream out;
  out << "n\\m";
  for (Index m : grid.col_schedule) out << ',' << m;
  out << '\n';
  for (std::size_t k = 0; k < grid.row_schedule.size(); ++k) {
    out << grid.row_schedule[k];
    for (std::size_t l = 0; l < grid.col_schedule.size(); ++l) {
      out << ',' << to_string(grid.values(k, l));
    }
    out << '\n';
  }
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(source + ": " + e.what());
  }
}

Json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

std::string write_game(const FiniteGame& game) { return dump(to_json(game)); }

FiniteGame read_game(const std::string& text) { return game_from_json(parse(text, "game")); }

std::string write_hypergraph(const Hypergraph& h) { return dump(to_json(h)); }

Hypergraph read_hypergraph(const std::string& text) {
  return hypergraph_from_json(parse(text, "hypergraph"));
}

}  // namespace minimax::io

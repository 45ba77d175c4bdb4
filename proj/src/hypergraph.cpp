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

#include "minimax/hypergraph.hpp"

#include <set>

#include "minimax/errors.hpp"
#include "minimax/lp.hpp"

namespace minimax {

Hypergraph::Hypergraph(std::vector<std::string> vertices, std::vector<IndexSet> edges)
    : vertices_(std::move(vertices)) {
  if (std::set<std::string>(vertices_.begin(), vertices_.end()).size() != vertices_.size()) {
    throw DomainError("duplicate vertex label");
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    IndexSet edge = normalize_index_set(std::move(edges[e]));
    if (edge.empty()) throw DomainError("edge " + std::to_string(e + 1) + " is empty");
    if (edge.back() > vertices_.size()) {
      throw DomainError("edge " + std::to_string(e + 1) + " refers to a missing vertex");
    }
    edges_.push_back(std::move(edge));
  }
}

Hypergraph Hypergraph::tail(Index n) {
  std::vector<std::string> v;
  std::vector<IndexSet> e;
  for (Index i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  for (Index j = 1; j <= n; ++j) {
    IndexSet edge;
    for (Index i = j; i <= n; ++i) edge.push_back(i);
    e.push_back(std::move(edge));
  }
  return Hypergraph(std::move(v), std::move(e));
}

bool is_feasible(const Hypergraph& h, const FractionalSolution& f) {
  Rational total = 0;
  const Index bound =
      f.kind == FractionalSolution::Kind::kMatching ? h.edge_count() : h.vertex_count();
  for (const auto& [i, w] : f.weights) {
    if (i < 1 || i > bound || w < 0) return false;
    total += w;
  }
  if (total != f.size) return false;
  auto weight = [&](Index i) {
    auto it = f.weights.find(i);
    return it == f.weights.end() ? Rational(0) : it->second;
  };
  if (f.kind == FractionalSolution::Kind::kMatching) {
    std::vector<Rational> load(h.vertex_count(), Rational(0));
    for (Index e = 0; e < h.edge_count(); ++e) {
      for (Index v : h.edges()[e]) load[v - 1] += weight(e + 1);
    }
    for (const auto& l : load) {
      if (l > 1) return false;
    }
    return true;
  }
  for (const auto& edge : h.edges()) {
    Rational s = 0;
    for (Index v : edge) s += weight(v);
    if (s < 1) return false;
  }
  return true;
}

namespace {

MatrixXq incidence(const Hypergraph& h) {
  MatrixXq m = MatrixXq::Zero(h.vertex_count(), h.edge_count());
  for (Index e = 0; e < h.edge_count(); ++e) {
    for (Index v : h.edges()[e]) m(v - 1, e) = 1;
  }
  return m;
}

FractionalSolution collect(FractionalSolution::Kind kind, const VectorXq& x) {
  FractionalSolution f;
  f.kind = kind;
  f.size = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i) != 0) {
      f.weights.emplace(static_cast<Index>(i) + 1, x(i));
      f.size += x(i);
    }
  }
  return f;
}

}  // namespace

std::pair<Rational, FractionalSolution> nu_star(const Hypergraph& h) {
  if (h.edge_count() == 0) {
    return {Rational(0), FractionalSolution{FractionalSolution::Kind::kMatching, {}, 0}};
  }
  // max 1'f  s.t.  M f <= 1, f >= 0, with M the vertex-edge incidence.
  const MatrixXq m = incidence(h);
  const auto lp = lp::maximize<Rational>(m, VectorXq::Constant(h.vertex_count(), Rational(1)),
                                         VectorXq::Constant(h.edge_count(), Rational(1)));
  if (lp.status != lp::Status::kOptimal) throw std::logic_error("matching LP not optimal");
  auto f = collect(FractionalSolution::Kind::kMatching, lp.primal);
  return {lp.objective, std::move(f)};
}

std::pair<Rational, FractionalSolution> tau_star(const Hypergraph& h) {
  if (h.edge_count() == 0) {
    return {Rational(0), FractionalSolution{FractionalSolution::Kind::kCover, {}, 0}};
  }
  // min 1'g  s.t.  M'g >= 1, g >= 0, written as max -1'g s.t. -M'g <= -1.
  const MatrixXq mt = -incidence(h).transpose();
  const auto lp = lp::maximize<Rational>(mt, VectorXq::Constant(h.edge_count(), Rational(-1)),
                                         VectorXq::Constant(h.vertex_count(), Rational(-1)));
  if (lp.status != lp::Status::kOptimal) throw std::logic_error("cover LP not optimal");
  auto g = collect(FractionalSolution::Kind::kCover, lp.primal);
  return {-lp.objective, std::move(g)};
}

FiniteGame game_of_hypergraph(const Hypergraph& h) {
  if (h.vertex_count() == 0 || h.edge_count() == 0) {
    throw DomainError("the game of a hypergraph needs a vertex and an edge");
  }
  std::vector<std::string> cols;
  for (Index e = 1; e <= h.edge_count(); ++e) cols.push_back("E" + std::to_string(e));
  return FiniteGame(h.vertices(), std::move(cols), incidence(h));
}

MixedStrategy cover_to_strategy(const FractionalSolution& cover) {
  if (cover.kind != FractionalSolution::Kind::kCover) throw DomainError("not a cover");
  if (cover.size <= 0) throw DomainError("cover has no mass");
  std::map<Index, Rational> p;
  for (const auto& [v, g] : cover.weights) {
    if (g != 0) p.emplace(v, g / cover.size);
  }
  return MixedStrategy(std::move(p));
}

FractionalSolution strategy_to_cover(const Hypergraph& h, const MixedStrategy& p,
                                     const Rational& alpha) {
  if (alpha <= 0) throw DomainError("alpha must be positive");
  if (p.max_index() > h.vertex_count()) throw DomainError("strategy refers to a missing vertex");
  for (Index e = 0; e < h.edge_count(); ++e) {
    Rational s = 0;
    for (Index v : h.edges()[e]) s += p[v];
    if (s < alpha) {
      throw DomainError("edge E" + std::to_string(e + 1) + " collects " + to_string(s) +
                        " < alpha = " + to_string(alpha));
    }
  }
  FractionalSolution g;
  g.kind = FractionalSolution::Kind::kCover;
  g.size = 0;
  for (const auto& [v, w] : p.weights()) {
    g.weights.emplace(v, w / alpha);
    g.size += w / alpha;
  }
  return g;
}

}  // namespace minimax

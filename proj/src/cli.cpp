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

#include "minimax/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "minimax/density.hpp"
#include "minimax/errors.hpp"
#include "minimax/hypergraph.hpp"
#include "minimax/io.hpp"
#include "minimax/series.hpp"
#include "minimax/solver.hpp"
#include "minimax/structure.hpp"
#include "minimax/truncation.hpp"
#include "minimax/zoo.hpp"

namespace minimax::cli {

namespace {

using io::Json;

const char* command_name(Command c) {
  switch (c) {
    case Command::kSolve: return "solve";
    case Command::kGrid: return "grid";
    case Command::kExtract: return "extract";
    case Command::kDetect: return "detect";
    case Command::kDims: return "dims";
    case Command::kHyper: return "hyper";
    case Command::kSeries: return "series";
    case Command::kDensity: return "density";
  }
  return "?";
}

Rational option_rational(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const DomainError& e) {
    throw DomainError(std::string(flag) + ": " + e.what());
  }
}

bool is_file(const std::string& input) {
  std::error_code ec;
  return std::filesystem::is_regular_file(input, ec);
}

SetFamily resolve_family(const std::string& name) {
  if (name.empty()) throw DomainError("--family: a family name or file is required");
  if (is_file(name)) return io::family_from_json(io::load(name));
  return SetFamily::by_name(name);
}

Json inputs_of(const RunConfig& c) {
  Json in{{"command", command_name(c.command)}, {"input", c.input}};
  switch (c.command) {
    case Command::kGrid:
      in["rows"] = c.rows;
      in["cols"] = c.cols;
      in["tol"] = to_string(parse_rational(c.tol));
      break;
    case Command::kExtract:
      in["vlow"] = to_string(parse_rational(c.vlow));
      in["vbar"] = to_string(parse_rational(c.vbar));
      in["depth"] = c.depth;
      break;
    case Command::kDetect:
      in["mode"] = c.greedy ? "greedy" : "exact";
      if (c.greedy) in["budget"] = c.budget;
      in["window"] = c.window;
      break;
    case Command::kSeries:
      in["family"] = c.family;
      in["mode"] = c.series_mode;
      in["horizon"] = c.horizon;
      if (c.series_mode == "fool") in["eps"] = to_string(parse_rational(c.eps));
      break;
    case Command::kDensity:
      in["prefix"] = c.prefix;
      in["count"] = c.count;
      break;
    default:
      break;
  }
  return in;
}

std::string solve_cmd(const RunConfig& c) {
  const FiniteGame game = io::game_from_json(io::load(c.input));
  const SolveResult r = solve(game);
  Json out = io::to_json(r, game);
  out["inputs"] = inputs_of(c);
  out["verified"] = verify(game, r);
  return io::dump(out);
}

std::string grid_cmd(const RunConfig& c) {
  const Rational tol = option_rational(c.tol, "--tol");
  const GameOracle oracle = zoo::by_name(c.input);
  const ValueGrid grid = value_grid(oracle, c.rows, c.cols, c.threads);
  const GapReport gap = gap_report(oracle, grid, tol);
  if (c.format == Format::kCsv) {
    // Inputs and the gap report ride along as comment lines.
    return "# inputs " + inputs_of(c).dump() + "\n" + io::grid_to_csv(grid) + "# gap " +
           io::to_json(gap).dump() + "\n";
  }
  Json values = Json::array();
  for (Eigen::Index k = 0; k < grid.values.rows(); ++k) {
    Json row = Json::array();
    for (Eigen::Index l = 0; l < grid.values.cols(); ++l) row.push_back(io::to_json(grid.values(k, l)));
    values.push_back(std::move(row));
  }
  return io::dump(Json{{"inputs", inputs_of(c)}, {"values", values}, {"gap", io::to_json(gap)}});
}

std::string extract_cmd(const RunConfig& c) {
  const GameOracle oracle = zoo::by_name(c.input);
  const auto r = extract_violating_core(oracle, option_rational(c.vlow, "--vlow"),
                                        option_rational(c.vbar, "--vbar"), c.depth);
  Json out = io::to_json(r);
  out["inputs"] = inputs_of(c);
  return io::dump(out);
}

std::string detect_cmd(const RunConfig& c) {
  Json out;
  if (is_file(c.input)) {
    const FiniteGame game = io::game_from_json(io::load(c.input));
    if (c.greedy) {
      const auto g = staircase_greedy(game, c.budget);
      out = io::to_json(g.witness);
      out["stalled"] = g.stalled;
    } else {
      out = io::to_json(staircase_exact(game));
    }
  } else {
    const GameOracle oracle = zoo::by_name(c.input);
    if (!c.greedy) {
      throw DomainError("exact detection needs a game file; use --greedy for zoo games");
    }
    const auto g = staircase_greedy(oracle, c.budget, c.window);
    out = io::to_json(g.witness);
    out["stalled"] = g.stalled;
  }
  out["inputs"] = inputs_of(c);
  return io::dump(out);
}

std::string dims_cmd(const RunConfig& c) {
  const FiniteGame game = io::game_from_json(io::load(c.input));
  return io::dump(Json{{"inputs", inputs_of(c)},
                       {"vc", vc_dimension(game)},
                       {"littlestone", littlestone_dimension(game)},
                       {"threshold", threshold_dimension(game)}});
}

std::string hyper_cmd(const RunConfig& c) {
  const Hypergraph h = io::hypergraph_from_json(io::load(c.input));
  const bool all = !c.nu && !c.tau && !c.game;
  Json out{{"inputs", inputs_of(c)}};
  if (all || c.nu) {
    const auto [v, f] = nu_star(h);
    out["nu_star"] = io::to_json(v);
    out["matching"] = io::to_json(f);
  }
  if (all || c.tau) {
    const auto [v, g] = tau_star(h);
    out["tau_star"] = io::to_json(v);
    out["cover"] = io::to_json(g);
  }
  if ((all || c.game) && h.edge_count() > 0) {
    const FiniteGame game = game_of_hypergraph(h);
    const SolveResult r = solve(game);
    out["game"] = io::to_json(r, game);
  }
  return io::dump(out);
}

std::string series_cmd(const RunConfig& c) {
  const SetFamily family = resolve_family(c.family);
  Json out{{"inputs", inputs_of(c)}};
  if (c.series_mode == "fool") {
    const auto r = fooling_series(family, option_rational(c.eps, "--eps"), c.horizon);
    out["ok"] = r.ok;
    out["value"] = io::to_json(r.value);
    out["rows_generated"] = r.rows_generated;
    if (r.ok) {
      Rational total = 0;
      Json terms = Json::array();
      for (const auto& t : r.terms) {
        total += t;
        terms.push_back(io::to_json(t));
      }
      const auto check = check_premise(family, *r.series, c.horizon);
      out["total"] = io::to_json(total);
      out["max_member_sum"] = io::to_json(check.max_sum);
      out["violations"] = check.violations.size();
      out["terms"] = terms;
    }
  } else if (c.series_mode == "constant") {
    const auto r = enforcing_constant_lower(family, c.horizon);
    out["unbounded"] = r.unbounded;
    out["uncovered"] = r.uncovered;
    if (!r.unbounded) out["value"] = io::to_json(r.value);
  } else if (c.series_mode == "harmonic") {
    const auto r = check_premise(family, Series::harmonic(), c.horizon);
    out["max_member_sum"] = io::to_json(r.max_sum);
    out["exhaustive"] = r.exhaustive;
    Json v = Json::array();
    for (const auto& s : r.violations) v.push_back(s);
    out["violations"] = v;
  } else {
    throw DomainError("--mode must be fool, constant or harmonic");
  }
  return io::dump(out);
}

std::string density_cmd(const RunConfig& c) {
  const GameOracle oracle = zoo::by_name(c.input);
  Json out = io::to_json(density_report(oracle, c.prefix, c.count));
  out["inputs"] = inputs_of(c);
  return io::dump(out);
}

std::string dispatch(const RunConfig& c) {
  switch (c.command) {
    case Command::kSolve: return solve_cmd(c);
    case Command::kGrid: return grid_cmd(c);
    case Command::kExtract: return extract_cmd(c);
    case Command::kDetect: return detect_cmd(c);
    case Command::kDims: return dims_cmd(c);
    case Command::kHyper: return hyper_cmd(c);
    case Command::kSeries: return series_cmd(c);
    case Command::kDensity: return density_cmd(c);
  }
  throw DomainError("unknown command");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string report;
  try {
    report = dispatch(config);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
  if (config.output.empty()) {
    out << report;
  } else {
    std::ofstream file(config.output, std::ios::binary);
    if (!file || !(file << report)) {
      err << "error: cannot write " << config.output << "\n";
      return kDomainFailure;
    }
  }
  return kOk;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact analysis of win-lose games through finite truncations", "minimax-lab"};
  app.require_subcommand(1);
  std::string rows, cols, format = "json";
  app.add_option("-o,--output", c.output, "Write the report to this file");

  auto* solve = app.add_subcommand("solve", "Solve a game file exactly");
  solve->add_option("game", c.input, "Game JSON file")->required();

  auto* grid = app.add_subcommand("grid", "Value grid and gap report of a zoo game");
  grid->add_option("oracle", c.input, "Zoo game name")->required();
  grid->add_option("--rows", rows, "Row schedule, e.g. 1,2,4,8");
  grid->add_option("--cols", cols, "Column schedule, e.g. 1,2,4,8");
  grid->add_option("--tol", c.tol, "Convergence tolerance a/b");
  grid->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  grid->add_option("--threads", c.threads, "Worker threads for grid cells");

  auto* extract = app.add_subcommand("extract", "Alternating violating-core extraction");
  extract->add_option("oracle", c.input, "Zoo game name")->required();
  extract->add_option("--vlow", c.vlow, "Lower gap level a/b");
  extract->add_option("--vbar", c.vbar, "Upper gap level a/b");
  extract->add_option("--depth", c.depth, "Number of column steps");

  auto* detect = app.add_subcommand("detect", "Find a staircase (full lower-triangular) submatrix");
  detect->add_option("input", c.input, "Game JSON file or zoo game name")->required();
  detect->add_flag("--exact", "Exhaustive search (default, game files only)");
  detect->add_flag("--greedy", c.greedy, "Alternating greedy construction");
  detect->add_option("--budget", c.budget, "Greedy size budget");
  detect->add_option("--window", c.window, "Greedy scan window for zoo games");

  auto* dims = app.add_subcommand("dims", "VC, Littlestone and threshold dimension");
  dims->add_option("game", c.input, "Game JSON file")->required();

  auto* hyper = app.add_subcommand("hyper", "Fractional matching and cover of a hypergraph");
  hyper->add_option("hypergraph", c.input, "Hypergraph JSON file")->required();
  hyper->add_flag("--nu", c.nu, "Fractional matching number");
  hyper->add_flag("--tau", c.tau, "Fractional cover number");
  hyper->add_flag("--game", c.game, "Value of the incidence game");

  auto* series = app.add_subcommand("series", "Series against a family of finite sets");
  series->add_option("--family", c.family, "Family name or JSON file")->required();
  series->add_option("--mode", c.series_mode, "fool, constant or harmonic");
  series->add_option("--eps", c.eps, "Fooling level a/b");
  series->add_option("--horizon", c.horizon, "Largest element considered");

  auto* density = app.add_subcommand("density", "Prefix row and column densities");
  density->add_option("oracle", c.input, "Zoo game name")->required();
  density->add_option("--prefix", c.prefix, "Prefix length");
  density->add_option("--count", c.count, "Rows and columns reported");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kDomainFailure;
  }

  const std::pair<CLI::App*, Command> table[] = {
      {solve, Command::kSolve},   {grid, Command::kGrid},   {extract, Command::kExtract},
      {detect, Command::kDetect}, {dims, Command::kDims},   {hyper, Command::kHyper},
      {series, Command::kSeries}, {density, Command::kDensity}};
  for (const auto& [sub, cmd] : table) {
    if (sub->parsed()) c.command = cmd;
  }
  c.format = format == "csv" ? Format::kCsv : Format::kJson;
  try {
    if (!rows.empty()) c.rows = parse_index_list(rows);
    if (!cols.empty()) c.cols = parse_index_list(cols);
    parse_rational(c.tol);
    parse_rational(c.vlow);
    parse_rational(c.vbar);
    parse_rational(c.eps);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
  return run(c, out, err);
}

}  // namespace minimax::cli

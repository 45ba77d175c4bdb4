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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "doctest.h"
#include "minimax/cli.hpp"
#include "minimax/io.hpp"
#include "minimax/zoo.hpp"

using namespace minimax;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "minimax-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("minimax-lab-test-" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("solve a game file") {
  const auto path = temp_file("mp.json", io::write_game(zoo::matching_pennies()));
  const auto r = run_cli({"solve", path});
  REQUIRE(r.code == cli::kOk);
  const auto j = io::Json::parse(r.out);
  CHECK(j["value"] == "1/2");
  CHECK(j.contains("inputs"));
}

TEST_CASE("grid csv") {
  const auto r = run_cli({"grid", "lng", "--rows", "1,2,4", "--cols", "1,2,4", "--format", "csv"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.rfind("# inputs ", 0) == 0);
  CHECK(r.out.find("n\\m,1,2,4\n1,1,0,0\n2,1,1,0\n4,1,1,1\n") != std::string::npos);
  CHECK(r.out.find("# gap ") != std::string::npos);
}

TEST_CASE("grid output does not depend on thread count") {
  const auto one = run_cli({"grid", "diagonal", "--rows", "1,2,4,8,16", "--cols", "1,2,4,8,16",
                            "--threads", "1"});
  const auto four = run_cli({"grid", "diagonal", "--rows", "1,2,4,8,16", "--cols", "1,2,4,8,16",
                             "--threads", "4"});
  REQUIRE(one.code == cli::kOk);
  CHECK(one.out == four.out);
}

TEST_CASE("dims") {
  const auto path = temp_file("id4.json", io::write_game(zoo::identity(4)));
  const auto r = run_cli({"dims", path});
  REQUIRE(r.code == cli::kOk);
  const auto j = io::Json::parse(r.out);
  CHECK(j["vc"] == 1);
  CHECK(j["littlestone"] == 1);
  CHECK(j["threshold"] == 1);
}

TEST_CASE("other subcommands") {
  const auto ex = run_cli({"extract", "lng", "--depth", "3"});
  REQUIRE(ex.code == cli::kOk);
  CHECK(io::Json::parse(ex.out)["ok"] == true);
  const auto det = run_cli({"detect", "lng", "--greedy", "--budget", "5"});
  REQUIRE(det.code == cli::kOk);
  CHECK(io::Json::parse(det.out)["rows"].size() == 5);
  const Hypergraph tri({"a", "b", "c"}, {{1, 2}, {2, 3}, {1, 3}});
  const auto hp = temp_file("tri.json", io::write_hypergraph(tri));
  const auto hy = run_cli({"hyper", hp, "--nu", "--tau", "--game"});
  REQUIRE(hy.code == cli::kOk);
  CHECK(hy.out.find("3/2") != std::string::npos);
  const auto se = run_cli({"series", "--family", "min-family", "--mode", "harmonic",
                           "--horizon", "100"});
  CHECK(se.code == cli::kOk);
  const auto de = run_cli({"density", "lng", "--prefix", "100", "--count", "3"});
  CHECK(de.code == cli::kOk);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"--help"}).code == cli::kOk);
  CHECK(run_cli({"grid", "no-such-game"}).code == cli::kDomainFailure);
  CHECK(run_cli({"detect", "lng"}).code == cli::kDomainFailure);
  CHECK(run_cli({"bogus"}).code == cli::kDomainFailure);
  CHECK(run_cli({"solve", "/nonexistent/game.json"}).code == cli::kDomainFailure);
  const auto big = run_cli({"grid", "lng", "--rows", "400", "--cols", "1"});
  CHECK(big.code == cli::kResourceFailure);
  CHECK_FALSE(big.err.empty());
  const auto bad = temp_file("bad.json", "{\"rows\": [1]}");
  const auto r = run_cli({"solve", bad});
  CHECK(r.code == cli::kDomainFailure);
  CHECK(r.err.find("cols") != std::string::npos);
}

TEST_CASE("installed binary") {
  const std::string bin = MINIMAX_LAB_BIN;
  CHECK(std::system((bin + " --help > /dev/null").c_str()) == 0);
  const int status = std::system((bin + " grid no-such-game 2> /dev/null").c_str());
  CHECK(WEXITSTATUS(status) == cli::kDomainFailure);
}

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

#include <iosfwd>
#include <string>
#include <vector>

#include "minimax/rational.hpp"

namespace minimax::cli {

enum class Command { kSolve, kGrid, kExtract, kDetect, kDims, kHyper, kSeries, kDensity };
enum class Format { kJson, kCsv };

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kResourceFailure = 2;

/// One parsed invocation. Rational options are kept as text and parsed by
/// run, so that malformed values are reported like any other input error.
struct RunConfig {
  Command command = Command::kSolve;
  std::string input;  // file path or zoo name
  std::vector<Index> rows{1, 2, 4, 8, 16, 32, 64};
  std::vector<Index> cols{1, 2, 4, 8, 16, 32, 64};
  std::string tol = "1/100";
  std::string vlow = "0";
  std::string vbar = "1";
  std::string eps = "1/10";
  Index depth = 5;
  bool greedy = false;
  Index budget = 10;
  Index window = 256;
  bool nu = false, tau = false, game = false;
  std::string family;
  std::string series_mode = "fool";  // fool | constant | harmonic
  Index horizon = 1024;
  Index prefix = 1000;
  Index count = 20;
  Format format = Format::kJson;
  std::string output;  // empty: standard output
  unsigned threads = 1;
};

/// Executes a parsed invocation and writes the report to out (or to
/// config.output). Errors go to err; the return value is the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with the full command-line grammar, then runs.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace minimax::cli

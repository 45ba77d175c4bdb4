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

#include "minimax/rational.hpp"

#include <cctype>

#include "minimax/errors.hpp"

namespace minimax {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw DomainError("not an exact rational (expected \"a/b\" or integer): \"" +
                      std::string(text) + "\"");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw DomainError("zero denominator in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  return Rational(n, d);
}

std::string to_string(const Rational& r) { return r.str(); }

std::vector<Index> parse_index_list(std::string_view text) {
  std::vector<Index> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    if (!all_digits(item)) {
      throw DomainError("bad index list entry \"" + std::string(item) + "\"");
    }
    const Index v = std::stoul(std::string(item));
    if (v == 0) throw DomainError("indices are 1-based; got 0");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw DomainError("empty index list");
  return out;
}

}  // namespace minimax

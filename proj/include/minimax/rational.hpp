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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace minimax {

// Expression templates are off so that Eigen sees a plain value type.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXq = MatrixX<Rational>;
using VectorXq = VectorX<Rational>;

// Strategy indices are 1-based, matching the positive integers of the model.
using Index = std::size_t;
using IndexSet = std::vector<Index>;  // sorted, duplicate-free

/// Parses "a/b" or "a" (optional leading '-') into lowest terms.
/// Decimal points, exponents and whitespace are rejected.
Rational parse_rational(std::string_view text);

/// Canonical lowest-terms text: "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);

/// Comma-separated list of positive integers, e.g. "1,2,4,8".
std::vector<Index> parse_index_list(std::string_view text);

}  // namespace minimax

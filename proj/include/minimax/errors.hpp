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

#include <stdexcept>
#include <string>

namespace minimax {

// Bad input or a violated precondition. CLI exit status 1.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An operation needs an oracle or family capability that was not provided.
class UnsupportedCapability : public DomainError {
 public:
  explicit UnsupportedCapability(const std::string& what)
      : DomainError("unsupported capability: " + what) {}
};

// Input exceeds an exact-computation budget. CLI exit status 2.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minimax

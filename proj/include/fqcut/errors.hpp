// Copyright 2026 The fqcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace fqcut {

// Out-of-range arguments are reported with std::invalid_argument. The two
// types below cover the remaining failure kinds.

/// The explicit cut did not split the graph into the expected number of
/// components.
class ConstructionFailure : public std::runtime_error {
 public:
  explicit ConstructionFailure(const std::string& what)
      : std::runtime_error(what) {}
};

/// The requested exhaustive computation is outside the sizes it supports.
class UnsupportedScale : public std::domain_error {
 public:
  explicit UnsupportedScale(const std::string& what)
      : std::domain_error(what) {}
};

/// Work limit for the exact searches, counted in node expansions.
struct SearchBudget {
  static constexpr unsigned long long kDefaultNodes = 200'000'000ULL;
  unsigned long long max_nodes = kDefaultNodes;
};

}  // namespace fqcut

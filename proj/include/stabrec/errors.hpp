// Copyright 2026 The stabrec developers
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

namespace stabrec {

/// Requested the output of a postselection branch whose probability is
/// (numerically) zero.
struct ZeroProbabilityError : std::domain_error {
  explicit ZeroProbabilityError(const std::string& what)
      : std::domain_error(what) {}
};

/// Recovery was requested for a circuit that is not interacting.
struct NotInteractingError : std::domain_error {
  explicit NotInteractingError(const std::string& what)
      : std::domain_error(what) {}
};

/// A protocol configuration whose success-probability recursion divides by
/// zero (some Q_i reaches 1).
struct DegenerateConfigError : std::domain_error {
  explicit DegenerateConfigError(const std::string& what)
      : std::domain_error(what) {}
};

}  // namespace stabrec

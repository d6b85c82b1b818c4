// Copyright 2026 The qsearch Authors
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
#include <stdexcept>
#include <string>

namespace qsearch {

/// Requested register width exceeds the configured qubit limit.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// A marked-set specification could not be parsed. `position()` is the
/// zero-based character offset where parsing stopped.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, std::size_t position)
        : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {
    }
    std::size_t position() const noexcept {
        return position_;
    }

   private:
    std::size_t position_;
};

/// A request that the hybrid engine's dispatch rules cannot serve (e.g. known M = 0).
struct PolicyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Internal consistency failure: broken normalization, degenerate measurement.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace qsearch

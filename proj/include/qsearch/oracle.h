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
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "qsearch/state_vector.h"

namespace qsearch {

/// The search predicate f over L = {0, ..., 2^n - 1}, held as the explicit
/// set of marked indices. Immutable; copies share the index storage.
class OracleSpec {
   public:
    /// `marked` may arrive in any order. Duplicates and indices >= 2^n are
    /// rejected (std::invalid_argument / std::out_of_range).
    OracleSpec(std::size_t n, std::vector<uint64_t> marked);

    std::size_t n() const {
        return n_;
    }
    /// N = 2^n.
    uint64_t size() const {
        return uint64_t{1} << n_;
    }
    /// M.
    uint64_t num_marked() const {
        return marked_->size();
    }
    /// Strictly increasing.
    std::span<const uint64_t> marked() const & {
        return *marked_;
    }
    std::span<const uint64_t> marked() const && = delete;

    /// f(i). Throws std::out_of_range for i >= 2^n.
    bool evaluate(uint64_t i) const;

   private:
    std::size_t n_;
    std::shared_ptr<const std::vector<uint64_t>> marked_;
};

/// OracleSpec plus call accounting. One instance per search run.
///
/// `superposed_calls` counts full applications of U_f to a register;
/// `classical_calls` counts single evaluations of f used to verify a measured
/// candidate. Both only increase.
class CountingOracle {
   public:
    explicit CountingOracle(OracleSpec spec) : spec_(std::move(spec)) {
    }

    const OracleSpec &spec() const {
        return spec_;
    }
    uint64_t superposed_calls() const {
        return superposed_calls_;
    }
    uint64_t classical_calls() const {
        return classical_calls_;
    }

    /// Classical check of one candidate; counted.
    bool verify(uint64_t i) {
        classical_calls_++;
        return spec_.evaluate(i);
    }

    void record_superposed_call() {
        superposed_calls_++;
    }

   private:
    OracleSpec spec_;
    uint64_t superposed_calls_ = 0;
    uint64_t classical_calls_ = 0;
};

/// |i>|..t..> -> |i>|..t xor f(i)..> where i is read from the first n qubits
/// and `target` is a workspace qubit (index >= n). Counts one call.
StateVector &apply_bit_oracle(StateVector &state, CountingOracle &oracle, std::size_t target);

/// Negates every amplitude whose first-n prefix is marked. Counts one call.
StateVector &apply_phase_oracle(StateVector &state, CountingOracle &oracle);

/// Parses a marked-set specification:
///
///   list:<d>,<d>,...        explicit decimal indices (empty list allowed)
///   range:<a>-<b>           a..b inclusive
///   first:<M>               0..M-1
///   count:<M>:seed:<S>      M distinct indices drawn uniformly with seed S
///   file:<path>             one decimal index per line, '#' starts a comment
///
/// Malformed text throws ParseError; an index >= 2^n throws std::out_of_range.
OracleSpec parse_marked_spec(std::string_view text, std::size_t n);

/// M distinct indices chosen uniformly from [0, 2^n), deterministic per seed.
OracleSpec random_oracle(std::size_t n, uint64_t num_marked, uint64_t seed);

}  // namespace qsearch

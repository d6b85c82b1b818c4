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
#include <string_view>

#include "qsearch/oracle.h"
#include "qsearch/rng.h"
#include "qsearch/state_vector.h"

namespace qsearch {

/// Which circuit produced a result.
enum class Branch { kYounesOnce, kYounesIterated, kGrover, kHybridFallback };

/// "younes-once", "younes-iterated", "grover", "hybrid-fallback".
std::string_view branch_name(Branch branch);

/// Register after a search circuit, before measurement.
///
/// Register widths: n + 1 after younes_once, n + q after younes_iterated(q),
/// n after grover.
struct PreparedSearchState {
    StateVector state;
    std::size_t n;
    std::size_t q_applied;
    CountingOracle oracle;
    Branch branch;
};

/// Outcome of one measure-and-verify cycle.
struct RunResult {
    uint64_t found_index = 0;
    bool is_solution = false;
    /// Superposed applications of U_f.
    uint64_t oracle_calls = 0;
    /// Classical evaluations of f spent verifying candidates.
    uint64_t classical_checks = 0;
    Branch branch = Branch::kYounesOnce;
    std::size_t q_used = 0;
    uint64_t seed = 0;

    uint64_t total_calls() const {
        return oracle_calls + classical_checks;
    }
};

/// Inversion about the mean over the first `over_qubits` qubits:
/// alpha_k -> 2<alpha> - alpha_k, with <alpha> the mean of the 2^m targeted
/// amplitudes. When m is smaller than the register, every amplitude with a
/// nonzero pattern on the trailing qubits must be zero (std::invalid_argument
/// otherwise) and the operator acts on the populated subspace only.
StateVector &diffusion(StateVector &state, std::size_t over_qubits);

/// Dense 2|psi><psi| - I on m qubits, for cross-checks only.
DenseMatrix diffusion_matrix(std::size_t m);

/// Single-iteration multi-match search on n + 1 qubits: H on the search
/// register, bit oracle into the workspace, H on the workspace, diffusion over
/// everything. One oracle call.
PreparedSearchState younes_once(CountingOracle oracle);

/// The same step repeated q times, each time on a freshly appended workspace
/// qubit with diffusion over the whole current register. q oracle calls.
PreparedSearchState younes_iterated(CountingOracle oracle, std::size_t q);

/// Grover: H on n qubits, then q rounds of (phase oracle, diffusion).
PreparedSearchState grover(CountingOracle oracle, std::size_t q);

/// Probability that measuring the first n qubits yields a marked index.
double success_probability(const PreparedSearchState &prepared);

/// Measures the first n qubits (collapsing `prepared.state`) and checks the
/// result with one classical evaluation of f.
RunResult run_and_verify(PreparedSearchState &prepared, Rng &rng);

}  // namespace qsearch

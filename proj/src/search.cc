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

#include "qsearch/search.h"

#include <stdexcept>
#include <string>

#include "qsearch/errors.h"

namespace qsearch {

std::string_view branch_name(Branch branch) {
    switch (branch) {
        case Branch::kYounesOnce:
            return "younes-once";
        case Branch::kYounesIterated:
            return "younes-iterated";
        case Branch::kGrover:
            return "grover";
        case Branch::kHybridFallback:
            return "hybrid-fallback";
    }
    throw std::invalid_argument("unknown branch");
}

StateVector &diffusion(StateVector &state, std::size_t over_qubits) {
    if (over_qubits == 0 || over_qubits > state.num_qubits()) {
        throw std::invalid_argument("diffusion: cannot target " + std::to_string(over_qubits) + " qubits of a " +
                                    std::to_string(state.num_qubits()) + "-qubit register");
    }
    const std::size_t stride = std::size_t{1} << (state.num_qubits() - over_qubits);
    const std::size_t count = std::size_t{1} << over_qubits;
    auto amps = state.amplitudes();
    if (stride > 1) {
        for (std::size_t k = 0; k < amps.size(); k++) {
            if (k % stride != 0 && amps[k] != Amplitude{0}) {
                throw std::invalid_argument("diffusion: amplitude outside the targeted subspace is nonzero");
            }
        }
    }
    Amplitude mean = 0;
    for (std::size_t i = 0; i < count; i++) {
        mean += amps[i * stride];
    }
    mean /= static_cast<double>(count);
    const Amplitude twice_mean = 2.0 * mean;
    for (std::size_t i = 0; i < count; i++) {
        amps[i * stride] = twice_mean - amps[i * stride];
    }
#ifdef QSEARCH_DEBUG_CHECKS
    state.check_normalized("diffusion");
#endif
    return state;
}

DenseMatrix diffusion_matrix(std::size_t m) {
    if (m == 0 || m > 10) {
        throw std::invalid_argument("diffusion_matrix: m must be in [1, 10]");
    }
    const std::size_t dim = std::size_t{1} << m;
    DenseMatrix d(dim);
    const double off = 2.0 / static_cast<double>(dim);
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            d(r, c) = (r == c) ? off - 1.0 : off;
        }
    }
    return d;
}

namespace {

void require_register_fits(std::size_t width, const char *op) {
    if (width > max_qubits()) {
        throw CapacityError(std::string(op) + ": needs " + std::to_string(width) + " qubits, limit is " +
                            std::to_string(max_qubits()));
    }
}

}  // namespace

PreparedSearchState younes_once(CountingOracle oracle) {
    const std::size_t n = oracle.spec().n();
    require_register_fits(n + 1, "younes_once");
    StateVector state = StateVector::zero(n + 1);
    state.apply_hadamard_range(0, n);
    apply_bit_oracle(state, oracle, n);
    state.apply_hadamard(n);
    diffusion(state, n + 1);
    return PreparedSearchState{std::move(state), n, 1, std::move(oracle), Branch::kYounesOnce};
}

PreparedSearchState younes_iterated(CountingOracle oracle, std::size_t q) {
    if (q == 0) {
        throw std::invalid_argument("younes_iterated: q must be at least 1");
    }
    const std::size_t n = oracle.spec().n();
    require_register_fits(n + q, "younes_iterated");
    StateVector state = StateVector::zero(n);
    state.apply_hadamard_range(0, n);
    for (std::size_t k = 1; k <= q; k++) {
        state.append_qubit();
        const std::size_t workspace = n + k - 1;
        apply_bit_oracle(state, oracle, workspace);
        state.apply_hadamard(workspace);
        diffusion(state, n + k);
    }
    return PreparedSearchState{std::move(state), n, q, std::move(oracle), Branch::kYounesIterated};
}

PreparedSearchState grover(CountingOracle oracle, std::size_t q) {
    const std::size_t n = oracle.spec().n();
    require_register_fits(n, "grover");
    StateVector state = StateVector::zero(n);
    state.apply_hadamard_range(0, n);
    for (std::size_t k = 0; k < q; k++) {
        apply_phase_oracle(state, oracle);
        diffusion(state, n);
    }
    return PreparedSearchState{std::move(state), n, q, std::move(oracle), Branch::kGrover};
}

double success_probability(const PreparedSearchState &prepared) {
    auto probs = prepared.state.marginal_probabilities(prepared.n);
    double total = 0;
    for (uint64_t i : prepared.oracle.spec().marked()) {
        total += probs[static_cast<std::size_t>(i)];
    }
    return total;
}

RunResult run_and_verify(PreparedSearchState &prepared, Rng &rng) {
    RunResult result;
    result.found_index = prepared.state.measure_first_n(prepared.n, rng);
    result.is_solution = prepared.oracle.verify(result.found_index);
    result.oracle_calls = prepared.oracle.superposed_calls();
    result.classical_checks = prepared.oracle.classical_calls();
    result.branch = prepared.branch;
    result.q_used = prepared.q_applied;
    result.seed = rng.seed();
    return result;
}

}  // namespace qsearch

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

#include "qsearch/hybrid.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qsearch/errors.h"

namespace qsearch {

uint64_t HybridPolicy::fallback_cap_for(uint64_t N) const {
    if (fallback_cap_calls) {
        return *fallback_cap_calls;
    }
    return static_cast<uint64_t>(std::ceil(9.0 * std::sqrt(static_cast<double>(N))));
}

void HybridPolicy::validate() const {
    if (younes_q == 0) {
        throw std::invalid_argument("HybridPolicy: younes_q must be at least 1");
    }
    if (verify_retries == 0) {
        throw std::invalid_argument("HybridPolicy: verify_retries must be at least 1");
    }
    if (!(fallback_growth > 1.0)) {
        throw std::invalid_argument("HybridPolicy: fallback_growth must exceed 1");
    }
}

Branch dispatch_known(uint64_t N, uint64_t M) {
    if (M == 0) {
        throw PolicyError("dispatch_known: M = 0, there is nothing to find");
    }
    if (M > N) {
        throw std::invalid_argument("dispatch_known: M exceeds N");
    }
    // M < N/8  <=>  8M < N, exact in integers.
    return (8 * M < N) ? Branch::kGrover : Branch::kYounesOnce;
}

std::size_t grover_iteration_count(uint64_t N, uint64_t M) {
    if (M == 0 || M > N) {
        throw std::invalid_argument("grover_iteration_count: requires 1 <= M <= N");
    }
    const double theta = std::asin(std::sqrt(static_cast<double>(M) / static_cast<double>(N)));
    const double optimum = std::numbers::pi / (4.0 * theta) - 0.5;
    return static_cast<std::size_t>(std::max(0.0, std::round(optimum)));
}

namespace {

/// Runs one prepared circuit, measures, verifies, and threads the oracle's
/// counters back to the caller.
template <typename Prepare>
bool attempt(CountingOracle &oracle, Rng &rng, RunResult &out, Prepare &&prepare) {
    PreparedSearchState prepared = prepare(std::move(oracle));
    RunResult one = run_and_verify(prepared, rng);
    oracle = std::move(prepared.oracle);
    out.found_index = one.found_index;
    out.is_solution = one.is_solution;
    out.branch = one.branch;
    out.q_used = one.q_used;
    return one.is_solution;
}

}  // namespace

RunResult search(CountingOracle &oracle, const HybridPolicy &policy, Rng &rng) {
    policy.validate();
    const uint64_t N = oracle.spec().size();
    const uint64_t calls_before = oracle.superposed_calls();
    const uint64_t checks_before = oracle.classical_calls();

    RunResult result;
    result.seed = rng.seed();
    auto finish = [&]() {
        result.oracle_calls = oracle.superposed_calls() - calls_before;
        result.classical_checks = oracle.classical_calls() - checks_before;
        return result;
    };

    if (policy.known_m) {
        const uint64_t M = *policy.known_m;
        const Branch branch = dispatch_known(N, M);
        for (std::size_t t = 0; t < policy.verify_retries; t++) {
            bool ok;
            if (branch == Branch::kGrover) {
                const std::size_t q = grover_iteration_count(N, M);
                ok = attempt(oracle, rng, result, [q](CountingOracle o) { return grover(std::move(o), q); });
            } else {
                ok = attempt(oracle, rng, result, [](CountingOracle o) { return younes_once(std::move(o)); });
            }
            if (ok) {
                break;
            }
        }
        return finish();
    }

    const std::size_t q = policy.younes_q;
    if (attempt(oracle, rng, result, [q](CountingOracle o) { return younes_iterated(std::move(o), q); })) {
        return finish();
    }

    const uint64_t cap = policy.fallback_cap_for(N);
    const double ceiling = std::sqrt(static_cast<double>(N));
    // Zero-round draws cost no superposed calls; bound the number of rounds
    // so termination does not depend on the draws.
    const uint64_t max_rounds = 64 + 4 * cap;
    double m = 1.0;
    uint64_t spent = 0;
    for (uint64_t round = 0; round < max_rounds && spent < cap; round++) {
        const auto span = static_cast<uint64_t>(std::ceil(m));
        uint64_t j = rng.uniform_below(std::max<uint64_t>(span, 1));
        j = std::min(j, cap - spent);
        const bool ok = attempt(oracle, rng, result, [j](CountingOracle o) {
            return grover(std::move(o), static_cast<std::size_t>(j));
        });
        spent += j;
        result.branch = Branch::kHybridFallback;
        if (ok) {
            break;
        }
        m = std::min(policy.fallback_growth * m, ceiling);
    }
    return finish();
}

}  // namespace qsearch

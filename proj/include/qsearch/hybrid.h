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
#include <optional>

#include "qsearch/oracle.h"
#include "qsearch/rng.h"
#include "qsearch/search.h"

namespace qsearch {

/// Dispatch and fallback parameters for `search`.
struct HybridPolicy {
    /// Number of solutions, when known in advance.
    std::optional<uint64_t> known_m;
    /// Depth of the iterated multi-match run tried first when M is unknown.
    std::size_t younes_q = 3;
    /// Total measure-and-verify attempts for a known-M dispatch.
    std::size_t verify_retries = 3;
    /// Growth factor of the randomized Grover schedule.
    double fallback_growth = 6.0 / 5.0;
    /// Superposed-call budget of the fallback; defaults to ceil(9 sqrt(N)).
    std::optional<uint64_t> fallback_cap_calls;

    uint64_t fallback_cap_for(uint64_t N) const;
    /// Throws std::invalid_argument on younes_q = 0, verify_retries = 0 or
    /// fallback_growth <= 1.
    void validate() const;
};

/// Known-M dispatch: Grover for 1 <= M < N/8, the one-step multi-match
/// algorithm for M >= N/8 (M = N included). Throws PolicyError on M = 0.
Branch dispatch_known(uint64_t N, uint64_t M);

/// Grover round count maximizing sin^2((2q + 1) theta): the integer nearest
/// pi / (4 theta) - 1/2, floored at zero. Requires 1 <= M <= N.
std::size_t grover_iteration_count(uint64_t N, uint64_t M);

/// Hybrid search. Every measured candidate is checked classically; the
/// result's oracle_calls and classical_checks are totals over all attempts,
/// also accumulated into `oracle`. Never throws for "no solution": an
/// exhausted budget yields is_solution = false.
///
/// Unknown M: one run of the iterated algorithm at depth younes_q, then a
/// randomized Grover schedule (round count j uniform in [0, m), m growing by
/// fallback_growth up to sqrt(N)) until success or until fallback_cap_calls
/// superposed calls are spent.
RunResult search(CountingOracle &oracle, const HybridPolicy &policy, Rng &rng);

}  // namespace qsearch

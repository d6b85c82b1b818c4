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

#include <cstdint>
#include <random>

namespace qsearch {

/// Seeded random source. Every draw is derived from the raw 64-bit engine
/// output with fixed arithmetic, so streams are reproducible across standard
/// library implementations.
class Rng {
   public:
    explicit Rng(uint64_t seed);

    /// Independent stream for shot `stream` of a run seeded with `master`.
    /// Counter-based, so shots can be evaluated in any order or in parallel.
    static Rng for_stream(uint64_t master, uint64_t stream);

    uint64_t next_u64();
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform integer in [0, bound); bound must be positive.
    uint64_t uniform_below(uint64_t bound);

    uint64_t seed() const {
        return seed_;
    }

   private:
    uint64_t seed_;
    std::mt19937_64 engine_;
};

uint64_t splitmix64(uint64_t x);

}  // namespace qsearch

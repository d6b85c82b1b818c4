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
#include <vector>

namespace qsearch {

// Analytic predictions for the multi-match search and for Grover's algorithm.
// N is the search-space size 2^n and M the number of marked items. Functions
// taking a real `ratio` are the continuous x = M/N forms used for curves.

/// Register after one step of the multi-match algorithm.
struct OneShotAmplitudes {
    /// Marked prefix with workspace 1.
    double a;
    /// Every other basis state.
    double b;
    /// Doubled space size 2N.
    double doubled_size;
    /// Mean amplitude the diffusion reflects about.
    double mean;
};

/// Throws std::invalid_argument unless N is a power of two >= 2 and M <= N.
OneShotAmplitudes one_shot_amplitudes(uint64_t N, uint64_t M);

/// 5x - 8x^2 + 4x^3 with x = M/N.
double p_success_once(uint64_t N, uint64_t M);
double p_success_once_ratio(double ratio);
/// (2N - 2M) b^2.
double p_nonsuccess_once(uint64_t N, uint64_t M);

/// Amplitude recurrence of the iterated algorithm after q iterations.
///
/// Every marked prefix carries the 2^q amplitudes a_list and b_list (each of
/// length 2^(q-1)). Every unmarked basis state carries b_list[0].
struct AmplitudeLadder {
    uint64_t N = 0;
    uint64_t M = 0;
    std::size_t q = 0;
    std::vector<double> a_list;
    std::vector<double> b_list;
    /// Diffusion means for iterations 1..q.
    std::vector<double> mean_history;

    double unmarked_amplitude() const {
        return b_list.front();
    }
    /// M * sum(a_i^2 + b_i^2).
    double success_probability() const;
    /// Total squared norm including the unmarked states; 1 up to rounding.
    double total_norm() const;
};

/// Runs the recurrence from a_0 = b_0 = 1/sqrt(N). Requires 1 <= q <= 24.
AmplitudeLadder amplitude_ladder(uint64_t N, uint64_t M, std::size_t q);

/// (x - 1)(1 - 2x)^(2q) + 1 with x = M/N, q >= 1. Zero at M = 0.
double p_success_iterated(uint64_t N, uint64_t M, std::size_t q);
double p_success_iterated_ratio(double ratio, std::size_t q);

/// Closed form of the unmarked amplitude after q iterations:
/// N^(-1/2) 2^(-q/2) (1 - 2M/N)^q.
double b0_closed(uint64_t N, uint64_t M, std::size_t q);

/// Grover after q rounds: sin^2((2q + 1) theta), sin^2(theta) = M/N.
/// Requires 1 <= M <= N.
double p_grover(uint64_t N, uint64_t M, std::size_t q);
double p_grover_ratio(double ratio, std::size_t q);

/// Largest N accepted by the binomial averages.
constexpr uint64_t kMaxAverageSize = uint64_t{1} << 20;

/// 2^-N sum_{M=1..N} C(N,M) p_success_once(N, M). Exact rational arithmetic
/// for N <= 64, log-space binomials above. N must be a power of two.
double average_p_once(uint64_t N);
/// The alternative closed form 1 - 2^-N. Reported for comparison only; it
/// does not agree with the summation.
double average_p_once_alt_closed_form(uint64_t N);
/// 2^-N sum_{M=1..N} C(N,M) M/N; always 1/2.
double average_p_classical(uint64_t N);
/// 2^-N sum_{M=1..N} C(N,M) p_grover(N, M, q).
double average_p_grover(uint64_t N, std::size_t q);

/// sum_{M=1..N} C(N,M) sin^2(k theta_M) for odd k, N <= 20. Equals 2^(N-1).
double grover_sum_identity(uint64_t N, uint64_t k);

/// First-order bound q >= (p - x) / (4x(1 - x)). Requires 0 < M < N and
/// 0 < target_p < 1.
double iterations_lower_bound(uint64_t N, uint64_t M, double target_p);
/// Real q solving p_success_iterated = target_p exactly (clamped at 0).
/// Throws for M = N/2, where every q >= 1 already gives certainty.
double exact_iterations(uint64_t N, uint64_t M, double target_p);

/// 1 - x* where x* is the least ratio in (0, 1/2] with
/// p_success_iterated_ratio(x, q) >= threshold_p, found by bisection to 1e-12.
double coverage_fraction(std::size_t q, double threshold_p);

struct RatioMinimum {
    double ratio;
    double probability;
};
/// Minimum of p_success_iterated_ratio over [1/2, 1]; attained at
/// x = (4q + 1) / (4q + 2).
RatioMinimum min_p_over_upper_range(std::size_t q);

}  // namespace qsearch

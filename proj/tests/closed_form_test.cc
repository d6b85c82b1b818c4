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

#include "qsearch/closed_form.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gtest/gtest.h"

using namespace qsearch;

namespace {

/// Binomially weighted average by Pascal's triangle in long double; shares no
/// code with the library's exact or log-space paths.
long double pascal_average(uint64_t N, long double (*p)(long double)) {
    std::vector<long double> row = {1.0L};
    for (uint64_t r = 1; r <= N; r++) {
        std::vector<long double> next(r + 1);
        next[0] = next[r] = 1.0L;
        for (uint64_t k = 1; k < r; k++) {
            next[k] = row[k - 1] + row[k];
        }
        row = std::move(next);
    }
    long double total = 0;
    for (uint64_t M = 1; M <= N; M++) {
        total += row[M] * p(static_cast<long double>(M) / static_cast<long double>(N));
    }
    return total / std::pow(2.0L, static_cast<long double>(N));
}

long double cubic(long double x) {
    return 5 * x - 8 * x * x + 4 * x * x * x;
}
long double identity(long double x) {
    return x;
}

double iterated(double x, int q) {
    return (x - 1) * std::pow(1 - 2 * x, 2 * q) + 1;
}

}  // namespace

TEST(one_shot, amplitudes) {
    for (uint64_t N : {2u, 4u, 8u, 64u}) {
        auto half = one_shot_amplitudes(N, N / 2);
        ASSERT_NEAR(half.a, 2 / std::sqrt(2.0 * N), 1e-15);
        ASSERT_NEAR(half.b, 0.0, 1e-15);

        auto none = one_shot_amplitudes(N, 0);
        ASSERT_NEAR(none.a, 3 / std::sqrt(2.0 * N), 1e-15);
        ASSERT_NEAR(none.b, 1 / std::sqrt(2.0 * N), 1e-15);
    }
    for (uint64_t N = 2; N <= 128; N *= 2) {
        for (uint64_t M = 0; M <= N; M++) {
            auto amp = one_shot_amplitudes(N, M);
            const double P = amp.doubled_size;
            ASSERT_NEAR(M * amp.a * amp.a + (P - M) * amp.b * amp.b, 1.0, 1e-12);
            ASSERT_NEAR(amp.a - amp.b, 2 / std::sqrt(P), 1e-12);
            // Mean of M entries at -1/sqrtP and P - M at +1/sqrtP.
            ASSERT_NEAR(amp.mean, (M * (-1 / std::sqrt(P)) + (P - M) / std::sqrt(P)) / P, 1e-15);
        }
    }
    ASSERT_THROW(one_shot_amplitudes(6, 1), std::invalid_argument);
    ASSERT_THROW(one_shot_amplitudes(1, 0), std::invalid_argument);
    ASSERT_THROW(one_shot_amplitudes(4, 5), std::invalid_argument);
}

TEST(one_shot, success_probability) {
    ASSERT_NEAR(p_success_once(4, 1), 0.8125, 1e-15);
    ASSERT_NEAR(p_success_once(16, 1), 0.282227, 5e-7);
    ASSERT_NEAR(p_success_once(64, 1), 0.076187, 5e-7);
    ASSERT_NEAR(p_nonsuccess_once(4, 1), 0.1875, 1e-15);
    ASSERT_NEAR(p_nonsuccess_once(8, 4), 0.0, 1e-15);
    ASSERT_NEAR(p_nonsuccess_once(8, 0), 1.0, 1e-15);
    for (uint64_t N = 2; N <= 128; N *= 2) {
        for (uint64_t M = 0; M <= N; M++) {
            auto amp = one_shot_amplitudes(N, M);
            ASSERT_NEAR(p_success_once(N, M), M * (amp.a * amp.a + amp.b * amp.b), 1e-12);
            ASSERT_NEAR(p_success_once(N, M) + p_nonsuccess_once(N, M), 1.0, 1e-12);
        }
    }
    ASSERT_THROW(p_success_once(12, 1), std::invalid_argument);
}

TEST(ladder, first_iteration_matches_one_shot) {
    for (uint64_t N = 2; N <= 64; N *= 2) {
        for (uint64_t M = 0; M <= N; M++) {
            auto ladder = amplitude_ladder(N, M, 1);
            auto amp = one_shot_amplitudes(N, M);
            ASSERT_EQ(ladder.a_list.size(), 1u);
            ASSERT_NEAR(ladder.a_list[0], amp.a, 1e-15);
            ASSERT_NEAR(ladder.b_list[0], amp.b, 1e-15);
            ASSERT_NEAR(ladder.mean_history[0], amp.mean, 1e-15);
        }
    }
}

TEST(ladder, second_and_third_iterations_by_hand) {
    const uint64_t N = 16, M = 3;
    const double x = 3.0 / 16.0, r = 1 / std::sqrt(2.0);
    auto one = one_shot_amplitudes(N, M);

    const double mean2 = one.b * r * (1 - x);
    const std::vector<double> a2 = {2 * mean2 - one.a * r, 2 * mean2 + one.a * r};
    const std::vector<double> b2 = {2 * mean2 - one.b * r, 2 * mean2 + one.b * r};
    auto l2 = amplitude_ladder(N, M, 2);
    ASSERT_NEAR(l2.mean_history[1], mean2, 1e-15);
    for (int i = 0; i < 2; i++) {
        ASSERT_NEAR(l2.a_list[i], a2[i], 1e-15);
        ASSERT_NEAR(l2.b_list[i], b2[i], 1e-15);
    }
    ASSERT_NEAR(l2.success_probability(), M * (a2[0] * a2[0] + a2[1] * a2[1] + b2[0] * b2[0] + b2[1] * b2[1]),
                1e-15);

    const double mean3 = b2[0] * r * (1 - x);
    const std::vector<double> a3 = {2 * mean3 - a2[0] * r, 2 * mean3 + a2[0] * r, 2 * mean3 - a2[1] * r,
                                    2 * mean3 + a2[1] * r};
    const std::vector<double> b3 = {2 * mean3 - b2[0] * r, 2 * mean3 + b2[0] * r, 2 * mean3 - b2[1] * r,
                                    2 * mean3 + b2[1] * r};
    auto l3 = amplitude_ladder(N, M, 3);
    ASSERT_EQ(l3.a_list.size(), 4u);
    for (int i = 0; i < 4; i++) {
        ASSERT_NEAR(l3.a_list[i], a3[i], 1e-15);
        ASSERT_NEAR(l3.b_list[i], b3[i], 1e-15);
    }
}

TEST(ladder, normalization_and_lengths) {
    for (uint64_t N = 2; N <= 128; N *= 2) {
        for (uint64_t M = 0; M <= N; M += (N >= 32 ? 3 : 1)) {
            for (std::size_t q = 1; q <= 6; q++) {
                auto ladder = amplitude_ladder(N, M, q);
                ASSERT_EQ(ladder.a_list.size(), std::size_t{1} << (q - 1));
                ASSERT_EQ(ladder.mean_history.size(), q);
                ASSERT_NEAR(ladder.total_norm(), 1.0, 1e-10);
                ASSERT_NEAR(ladder.success_probability(), p_success_iterated(N, M, q), 1e-10);
            }
        }
    }
    ASSERT_THROW(amplitude_ladder(4, 1, 0), std::invalid_argument);
}

TEST(iterated, closed_form) {
    std::mt19937_64 gen(6);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < 1000; t++) {
        const double x = unit(gen);
        ASSERT_NEAR(p_success_iterated_ratio(x, 1), p_success_once_ratio(x), 1e-12);
    }
    for (std::size_t q = 1; q <= 8; q++) {
        ASSERT_NEAR(p_success_iterated(64, 32, q), 1.0, 1e-15);
        ASSERT_EQ(p_success_iterated(64, 0, q), 0.0);
    }
    ASSERT_THROW(p_success_iterated(4, 1, 0), std::invalid_argument);
}

TEST(iterated, b0_closed_matches_ladder) {
    for (uint64_t N = 2; N <= 128; N *= 2) {
        ASSERT_NEAR(b0_closed(N, 1, 0), 1 / std::sqrt(static_cast<double>(N)), 1e-15);
        for (uint64_t M = 0; M <= N; M++) {
            ASSERT_NEAR(b0_closed(N, M, 1), one_shot_amplitudes(N, M).b, 1e-15);
            for (std::size_t q = 1; q <= 10; q++) {
                ASSERT_NEAR(b0_closed(N, M, q), amplitude_ladder(N, M, q).b_list[0], 1e-12);
            }
        }
        ASSERT_EQ(b0_closed(N, N / 2, 3), 0.0);
    }
}

TEST(grover_closed_form, values) {
    ASSERT_NEAR(p_grover(4, 1, 1), 1.0, 1e-15);
    for (uint64_t M = 1; M <= 16; M++) {
        ASSERT_NEAR(p_grover(16, M, 0), M / 16.0, 1e-15);
    }
    for (std::size_t q = 0; q < 10; q++) {
        ASSERT_NEAR(p_grover(32, 32, q), 1.0, 1e-15);
    }
    ASSERT_THROW(p_grover(8, 0, 1), std::invalid_argument);
}

TEST(averages, table_values) {
    ASSERT_NEAR(average_p_once(4), 0.875, 1e-15);
    ASSERT_NEAR(average_p_once(8), 0.9375, 1e-15);
    ASSERT_NEAR(average_p_once(16), 0.96875, 1e-15);
    ASSERT_NEAR(average_p_once(32), 0.984375, 1e-15);
    ASSERT_NEAR(average_p_once(64), 0.992187, 5e-7);
    ASSERT_NEAR(average_p_once_alt_closed_form(4), 0.9375, 1e-15);
}

TEST(averages, match_pascal_oracle) {
    for (uint64_t N = 2; N <= 512; N *= 2) {
        ASSERT_NEAR(average_p_once(N), static_cast<double>(pascal_average(N, cubic)), 1e-12) << N;
        ASSERT_NEAR(average_p_classical(N), static_cast<double>(pascal_average(N, identity)), 1e-12) << N;
    }
}

TEST(averages, classical_is_one_half) {
    for (uint64_t N : {1u, 2u, 3u, 4u, 8u, 16u, 32u, 64u, 100u, 1024u}) {
        ASSERT_NEAR(average_p_classical(N), 0.5, 1e-12) << N;
    }
    ASSERT_THROW(average_p_classical(0), std::invalid_argument);
    ASSERT_THROW(average_p_once((uint64_t{1} << 20) * 2), std::invalid_argument);
}

TEST(averages, once_increases_with_size) {
    double prev = 0;
    for (uint64_t N = 2; N <= 4096; N *= 2) {
        double avg = average_p_once(N);
        ASSERT_GT(avg, prev);
        ASSERT_NEAR(avg, 1.0 - 1.0 / (2.0 * N), 1e-10);
        prev = avg;
    }
}

TEST(averages, grover_is_one_half) {
    for (uint64_t N : {2u, 4u, 8u, 16u, 100u}) {
        for (std::size_t q = 0; q <= 5; q++) {
            ASSERT_NEAR(average_p_grover(N, q), 0.5, 1e-9);
        }
    }
}

TEST(grover_identity, examples) {
    ASSERT_NEAR(grover_sum_identity(2, 1), 2.0, 1e-12);
    ASSERT_NEAR(grover_sum_identity(4, 3), 8.0, 1e-12);
    ASSERT_NEAR(grover_sum_identity(8, 5), 128.0, 1e-10);
    ASSERT_THROW(grover_sum_identity(4, 2), std::invalid_argument);
    ASSERT_THROW(grover_sum_identity(21, 1), std::invalid_argument);
}

TEST(grover_identity, sin_cos_agree_for_odd_multiples) {
    std::mt19937_64 gen(61);
    std::uniform_real_distribution<double> angle(1e-6, std::numbers::pi / 2 - 1e-6);
    for (int t = 0; t < 100; t++) {
        const double alpha = angle(gen);
        const double beta = std::numbers::pi / 2 - alpha;
        for (int k : {1, 3, 5, 7}) {
            const double s = std::sin(k * alpha), c = std::cos(k * beta);
            ASSERT_LE(std::abs(s * s - c * c), 1e-12);
        }
    }
}

TEST(grover_identity, sum_is_power_of_two) {
    for (uint64_t N = 2; N <= 16; N++) {
        for (uint64_t k : {1u, 3u, 5u, 7u}) {
            const double expected = std::ldexp(1.0, static_cast<int>(N) - 1);
            ASSERT_LE(std::abs(grover_sum_identity(N, k) - expected) / expected, 1e-6);
        }
    }
}

TEST(iteration_bounds, taylor_bound) {
    ASSERT_NEAR(iterations_lower_bound(16, 4, 0.25), 0.0, 1e-15);
    ASSERT_NEAR(iterations_lower_bound(16, 1, 0.5), (0.5 - 0.0625) / (4 * 0.0625 * 0.9375), 1e-12);
    ASSERT_NEAR(iterations_lower_bound(16, 1, 0.5), 1.867, 5e-4);
    // Theta(N/M): bound * M/N -> target_p / 4.
    for (uint64_t N = uint64_t{1} << 12; N <= (uint64_t{1} << 20); N *= 4) {
        ASSERT_NEAR(iterations_lower_bound(N, 1, 0.5) / static_cast<double>(N), 0.125, 1e-3);
    }
    ASSERT_THROW(iterations_lower_bound(16, 0, 0.5), std::invalid_argument);
    ASSERT_THROW(iterations_lower_bound(16, 16, 0.5), std::invalid_argument);
    ASSERT_THROW(iterations_lower_bound(16, 1, 1.0), std::invalid_argument);
}

TEST(iteration_bounds, exact_solve_inverts_closed_form) {
    for (uint64_t M : {1u, 2u, 3u, 5u, 7u}) {
        const double q = exact_iterations(64, M, 0.5);
        const double x = M / 64.0;
        ASSERT_GT(q, 0.0);
        ASSERT_NEAR((x - 1) * std::pow(1 - 2 * x, 2 * q) + 1, 0.5, 1e-12);
    }
    ASSERT_THROW(exact_iterations(16, 8, 0.5), std::invalid_argument);
}

TEST(coverage, matches_grid_scan) {
    // Oracle: least x on a 1e-6 grid of (0, 1/2] with p >= 1/2.
    for (int q = 1; q <= 4; q++) {
        double least = 0.5;
        for (int i = 1; i <= 500000; i++) {
            const double x = i * 1e-6;
            if (iterated(x, q) >= 0.5) {
                least = x;
                break;
            }
        }
        ASSERT_NEAR(coverage_fraction(q, 0.5), 1 - least, 1.1e-6) << q;
    }
    ASSERT_NEAR(coverage_fraction(1, 0.5), 0.875, 5e-3);
    // q = 1 reaches one half just below M/N = 1/8 (0.5078125 at 1/8 itself).
    ASSERT_GT(coverage_fraction(1, 0.5), 0.875);
    ASSERT_NEAR(coverage_fraction(1, 0.5), 0.877439, 1e-6);
    ASSERT_NEAR(coverage_fraction(2, 0.5), 0.928337, 1e-6);
    ASSERT_NEAR(coverage_fraction(3, 0.5), 0.949327, 1e-6);
}

TEST(upper_range, minimum) {
    // Oracle: grid scan of [1/2, 1].
    for (int q = 1; q <= 3; q++) {
        double best_x = 0.5, best_p = 2;
        for (int i = 0; i <= 500000; i++) {
            const double x = 0.5 + i * 1e-6;
            if (iterated(x, q) < best_p) {
                best_p = iterated(x, q);
                best_x = x;
            }
        }
        auto got = min_p_over_upper_range(q);
        ASSERT_NEAR(got.ratio, best_x, 2e-6);
        ASSERT_NEAR(got.probability, best_p, 1e-10);
    }
    ASSERT_NEAR(min_p_over_upper_range(1).ratio, 5.0 / 6.0, 1e-15);
    ASSERT_NEAR(min_p_over_upper_range(1).probability, 25.0 / 27.0, 1e-12);
    ASSERT_NEAR(min_p_over_upper_range(2).ratio, 0.9, 1e-15);
    ASSERT_NEAR(min_p_over_upper_range(2).probability, 0.95904, 1e-12);
    ASSERT_NEAR(min_p_over_upper_range(3).ratio, 13.0 / 14.0, 1e-15);
    ASSERT_NEAR(min_p_over_upper_range(3).probability, 0.97167, 5e-6);
}

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

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsearch {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr uint64_t kExactAverageLimit = 64;

void require_counts(uint64_t N, uint64_t M, const char *op) {
    if (N == 0) {
        throw std::invalid_argument(std::string(op) + ": N must be positive");
    }
    if (M > N) {
        throw std::invalid_argument(std::string(op) + ": M = " + std::to_string(M) + " exceeds N = " +
                                    std::to_string(N));
    }
}

void require_power_of_two(uint64_t N, const char *op) {
    if (N < 2 || (N & (N - 1)) != 0) {
        throw std::invalid_argument(std::string(op) + ": N = " + std::to_string(N) + " is not a power of two >= 2");
    }
}

void require_average_size(uint64_t N, const char *op) {
    if (N == 0 || N > kMaxAverageSize) {
        throw std::invalid_argument(std::string(op) + ": N must be in [1, 2^20]");
    }
}

double ratio_of(uint64_t N, uint64_t M) {
    return static_cast<double>(M) / static_cast<double>(N);
}

/// C(N, M) / 2^N for M = 0..N.
std::vector<double> binomial_weights(uint64_t N) {
    std::vector<double> weights(static_cast<std::size_t>(N) + 1);
    if (N <= kExactAverageLimit) {
        cpp_int c = 1;
        for (uint64_t m = 0; m <= N; m++) {
            weights[m] = std::ldexp(c.convert_to<double>(), -static_cast<int>(N));
            c = c * (N - m) / (m + 1);
        }
        return weights;
    }
    const double log_total = std::lgamma(static_cast<double>(N) + 1.0) - static_cast<double>(N) * std::numbers::ln2;
    for (uint64_t m = 0; m <= N; m++) {
        weights[m] = std::exp(log_total - std::lgamma(static_cast<double>(m) + 1.0) -
                              std::lgamma(static_cast<double>(N - m) + 1.0));
    }
    return weights;
}

}  // namespace

OneShotAmplitudes one_shot_amplitudes(uint64_t N, uint64_t M) {
    require_power_of_two(N, "one_shot_amplitudes");
    require_counts(N, M, "one_shot_amplitudes");
    const double P = 2.0 * static_cast<double>(N);
    const double inv_sqrt_p = 1.0 / std::sqrt(P);
    const double r = 4.0 * static_cast<double>(M) / P;
    return OneShotAmplitudes{
        .a = inv_sqrt_p * (3.0 - r),
        .b = inv_sqrt_p * (1.0 - r),
        .doubled_size = P,
        .mean = inv_sqrt_p * (1.0 - 2.0 * static_cast<double>(M) / P),
    };
}

double p_success_once_ratio(double x) {
    return x * (5.0 - x * (8.0 - 4.0 * x));
}

double p_success_once(uint64_t N, uint64_t M) {
    require_power_of_two(N, "p_success_once");
    require_counts(N, M, "p_success_once");
    return p_success_once_ratio(ratio_of(N, M));
}

double p_nonsuccess_once(uint64_t N, uint64_t M) {
    auto amps = one_shot_amplitudes(N, M);
    return (amps.doubled_size - 2.0 * static_cast<double>(M)) * amps.b * amps.b;
}

double AmplitudeLadder::success_probability() const {
    double sum = 0;
    for (double a : a_list) {
        sum += a * a;
    }
    for (double b : b_list) {
        sum += b * b;
    }
    return static_cast<double>(M) * sum;
}

double AmplitudeLadder::total_norm() const {
    const double b0 = unmarked_amplitude();
    const double unmarked_states = static_cast<double>(N - M) * std::ldexp(1.0, static_cast<int>(q));
    return success_probability() + unmarked_states * b0 * b0;
}

AmplitudeLadder amplitude_ladder(uint64_t N, uint64_t M, std::size_t q) {
    require_counts(N, M, "amplitude_ladder");
    if (q == 0 || q > 24) {
        throw std::invalid_argument("amplitude_ladder: q must be in [1, 24]");
    }
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const double x = ratio_of(N, M);
    const double seed = 1.0 / std::sqrt(static_cast<double>(N));

    AmplitudeLadder ladder;
    ladder.N = N;
    ladder.M = M;
    ladder.q = q;

    // First iteration: the marked amplitude enters with a minus sign, so it
    // leaves as 2<a> + a0/sqrt2 while the unmarked one leaves as 2<a> - b0/sqrt2.
    double mean = seed * inv_sqrt2 * (1.0 - x);
    ladder.mean_history.push_back(mean);
    ladder.a_list = {2.0 * mean + seed * inv_sqrt2};
    ladder.b_list = {2.0 * mean - seed * inv_sqrt2};

    for (std::size_t step = 2; step <= q; step++) {
        mean = ladder.b_list.front() * inv_sqrt2 * (1.0 - x);
        ladder.mean_history.push_back(mean);
        auto spawn = [mean, inv_sqrt2](const std::vector<double> &prev) {
            std::vector<double> next;
            next.reserve(prev.size() * 2);
            for (double v : prev) {
                next.push_back(2.0 * mean - v * inv_sqrt2);
                next.push_back(2.0 * mean + v * inv_sqrt2);
            }
            return next;
        };
        ladder.a_list = spawn(ladder.a_list);
        ladder.b_list = spawn(ladder.b_list);
    }
    return ladder;
}

double p_success_iterated_ratio(double x, std::size_t q) {
    if (q == 0) {
        throw std::invalid_argument("p_success_iterated: q must be at least 1");
    }
    return (x - 1.0) * std::pow(1.0 - 2.0 * x, 2.0 * static_cast<double>(q)) + 1.0;
}

double p_success_iterated(uint64_t N, uint64_t M, std::size_t q) {
    require_counts(N, M, "p_success_iterated");
    return p_success_iterated_ratio(ratio_of(N, M), q);
}

double b0_closed(uint64_t N, uint64_t M, std::size_t q) {
    require_counts(N, M, "b0_closed");
    const double qd = static_cast<double>(q);
    return std::pow(1.0 / std::numbers::sqrt2, qd) * std::pow(1.0 - 2.0 * ratio_of(N, M), qd) /
           std::sqrt(static_cast<double>(N));
}

double p_grover_ratio(double x, std::size_t q) {
    if (!(x > 0.0) || x > 1.0) {
        throw std::invalid_argument("p_grover: ratio must be in (0, 1]; M = 0 leaves theta undefined");
    }
    const double theta = std::asin(std::sqrt(x));
    const double s = std::sin((2.0 * static_cast<double>(q) + 1.0) * theta);
    return s * s;
}

double p_grover(uint64_t N, uint64_t M, std::size_t q) {
    require_counts(N, M, "p_grover");
    if (M == 0) {
        throw std::invalid_argument("p_grover: requires at least one marked item");
    }
    return p_grover_ratio(ratio_of(N, M), q);
}

double average_p_once(uint64_t N) {
    require_average_size(N, "average_p_once");
    require_power_of_two(N, "average_p_once");
    if (N <= kExactAverageLimit) {
        // p(N, M) = (5 M N^2 - 8 M^2 N + 4 M^3) / N^3, summed exactly.
        cpp_int numerator = 0;
        cpp_int c = 1;
        for (uint64_t m = 0; m <= N; m++) {
            if (m >= 1) {
                cpp_int mm = m;
                numerator += c * (5 * mm * N * N - 8 * mm * mm * N + 4 * mm * mm * mm);
            }
            c = c * (N - m) / (m + 1);
        }
        cpp_int denominator = cpp_int(1) << static_cast<unsigned>(N);
        denominator *= cpp_int(N) * N * N;
        return cpp_rational(numerator, denominator).convert_to<double>();
    }
    auto weights = binomial_weights(N);
    double total = 0;
    for (uint64_t m = 1; m <= N; m++) {
        total += weights[m] * p_success_once_ratio(ratio_of(N, m));
    }
    return total;
}

double average_p_once_alt_closed_form(uint64_t N) {
    require_average_size(N, "average_p_once_alt_closed_form");
    return 1.0 - std::ldexp(1.0, -static_cast<int>(N));
}

double average_p_classical(uint64_t N) {
    require_average_size(N, "average_p_classical");
    if (N <= kExactAverageLimit) {
        cpp_int numerator = 0;
        cpp_int c = 1;
        for (uint64_t m = 0; m <= N; m++) {
            numerator += c * m;
            c = c * (N - m) / (m + 1);
        }
        cpp_int denominator = (cpp_int(1) << static_cast<unsigned>(N)) * N;
        return cpp_rational(numerator, denominator).convert_to<double>();
    }
    auto weights = binomial_weights(N);
    double total = 0;
    for (uint64_t m = 1; m <= N; m++) {
        total += weights[m] * ratio_of(N, m);
    }
    return total;
}

double average_p_grover(uint64_t N, std::size_t q) {
    require_average_size(N, "average_p_grover");
    auto weights = binomial_weights(N);
    double total = 0;
    for (uint64_t m = 1; m <= N; m++) {
        total += weights[m] * p_grover_ratio(ratio_of(N, m), q);
    }
    return total;
}

double grover_sum_identity(uint64_t N, uint64_t k) {
    if (N == 0 || N > 20) {
        throw std::invalid_argument("grover_sum_identity: N must be in [1, 20]");
    }
    if (k % 2 == 0) {
        throw std::invalid_argument("grover_sum_identity: k must be an odd positive integer");
    }
    double total = 0;
    double c = static_cast<double>(N);  // C(N, 1)
    for (uint64_t m = 1; m <= N; m++) {
        const double theta = std::asin(std::sqrt(ratio_of(N, m)));
        const double s = std::sin(static_cast<double>(k) * theta);
        total += c * s * s;
        c = c * static_cast<double>(N - m) / static_cast<double>(m + 1);
    }
    return total;
}

double iterations_lower_bound(uint64_t N, uint64_t M, double target_p) {
    require_counts(N, M, "iterations_lower_bound");
    if (M == 0 || M == N) {
        throw std::invalid_argument("iterations_lower_bound: requires 0 < M < N");
    }
    if (!(target_p > 0.0 && target_p < 1.0)) {
        throw std::invalid_argument("iterations_lower_bound: target_p must be in (0, 1)");
    }
    const double x = ratio_of(N, M);
    return (target_p - x) / (4.0 * x * (1.0 - x));
}

double exact_iterations(uint64_t N, uint64_t M, double target_p) {
    require_counts(N, M, "exact_iterations");
    if (M == 0 || M == N) {
        throw std::invalid_argument("exact_iterations: requires 0 < M < N");
    }
    if (!(target_p > 0.0 && target_p < 1.0)) {
        throw std::invalid_argument("exact_iterations: target_p must be in (0, 1)");
    }
    const double x = ratio_of(N, M);
    const double base = std::abs(1.0 - 2.0 * x);
    if (base == 0.0) {
        throw std::invalid_argument("exact_iterations: M = N/2 succeeds with certainty for every q");
    }
    // (1 - 2x)^(2q) = (1 - p) / (1 - x)
    const double q = std::log((1.0 - target_p) / (1.0 - x)) / (2.0 * std::log(base));
    return std::max(0.0, q);
}

double coverage_fraction(std::size_t q, double threshold_p) {
    if (q == 0) {
        throw std::invalid_argument("coverage_fraction: q must be at least 1");
    }
    if (!(threshold_p > 0.0 && threshold_p <= 1.0)) {
        throw std::invalid_argument("coverage_fraction: threshold must be in (0, 1]");
    }
    // p is increasing on (0, 1/2] and reaches 1 at 1/2.
    double lo = 0.0;
    double hi = 0.5;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (p_success_iterated_ratio(mid, q) >= threshold_p) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 1.0 - hi;
}

RatioMinimum min_p_over_upper_range(std::size_t q) {
    if (q == 0) {
        throw std::invalid_argument("min_p_over_upper_range: q must be at least 1");
    }
    const double qd = static_cast<double>(q);
    const double ratio = (4.0 * qd + 1.0) / (4.0 * qd + 2.0);
    return RatioMinimum{ratio, p_success_iterated_ratio(ratio, q)};
}

}  // namespace qsearch

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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qsearch/hybrid.h"

namespace qsearch {

/// One row of the per-size performance table for the single-iteration
/// algorithm. Simulated columns are filled only when requested.
struct Table1Row {
    std::size_t n = 0;
    uint64_t N = 0;
    double max_p = 0;
    double min_p = 0;
    double avg_p = 0;
    double avg_alt_closed_form = 0;
    std::optional<double> sim_max_p;
    std::optional<double> sim_min_p;
    std::optional<double> sim_avg_p;
};

/// Rows n = 2..n_max (2 <= n_max <= 12). Max/min run over M = 1..N; the
/// average is the binomially weighted sum. With `simulate`, each M is also run
/// through the full circuit.
std::vector<Table1Row> table1(std::size_t n_max, bool simulate);

/// Column names plus numeric rows, written as CSV with 9 significant digits.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

CsvTable table1_csv(const std::vector<Table1Row> &rows);

/// Curve data at ratios k/points, k = 1..points:
///   5: ratio, p_younes, p_grover_q1, p_classical
///   7: ratio, p_younes_iter_q1..q6
///   8: ratio, p_grover_q1..q5, p_younes_iter_q1..q5
CsvTable sweep(int figure, std::size_t points);

void write_csv(std::ostream &out, const CsvTable &table);

enum class Algorithm { kYounes, kYounesIterated, kGrover };

/// "younes", "younes-iter", "grover".
Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algorithm);

struct ExperimentConfig {
    Algorithm algorithm = Algorithm::kYounes;
    std::size_t n = 0;
    std::string marked_spec;
    std::optional<std::size_t> q;
    uint64_t seed = 0;
    uint64_t shots = 1;
};

struct SimulationReport {
    std::string algorithm;
    std::size_t n = 0;
    uint64_t m = 0;
    std::size_t q = 0;
    uint64_t seed = 0;
    uint64_t shots = 0;
    uint64_t successes = 0;
    double success_rate = 0;
    double predicted = 0;
    uint64_t oracle_calls = 0;

    nlohmann::ordered_json to_json() const;
};

/// Runs `shots` prepare-measure-verify cycles. Shot k draws from
/// Rng::for_stream(seed, k), so the report does not depend on scheduling.
///
/// The circuit is deterministic, so it is prepared once and every shot
/// samples the same marginal distribution; oracle_calls still counts the
/// preparation cost of every shot.
SimulationReport simulate(const ExperimentConfig &config);

struct HybridReport {
    bool known_m = false;
    std::size_t n = 0;
    uint64_t m = 0;
    uint64_t seed = 0;
    uint64_t shots = 0;
    uint64_t successes = 0;
    double success_rate = 0;
    double predicted_first_attempt = 0;
    double mean_oracle_calls = 0;
    double mean_classical_checks = 0;
    uint64_t max_oracle_calls = 0;
    uint64_t oracle_call_budget = 0;
    uint64_t branch_younes_once = 0;
    uint64_t branch_younes_iterated = 0;
    uint64_t branch_grover = 0;
    uint64_t branch_fallback = 0;

    nlohmann::ordered_json to_json() const;
};

/// Runs the hybrid engine once per shot, each shot with its own oracle
/// counter and random stream. With `known_m` the policy is told the true M.
HybridReport hybrid_bench(const ExperimentConfig &config, bool known_m, HybridPolicy policy = {});

/// Closed-form prediction. Models: younes, younes-iter, grover, classical,
/// average. `m` is required except for `average` (and optional for
/// `classical`, which then reports the binomial average).
nlohmann::ordered_json predict(std::string_view model, std::size_t n, std::optional<uint64_t> m,
                               std::optional<std::size_t> q);

}  // namespace qsearch

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

#include "qsearch/experiments.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "qsearch/closed_form.h"
#include "qsearch/errors.h"
#include "qsearch/search.h"

namespace qsearch {

namespace {

/// Splits [0, shots) into contiguous chunks, one per worker. `body(begin, end,
/// partial)` fills a per-worker accumulator; accumulators are returned in
/// chunk order so the merge is deterministic.
template <typename Partial, typename Body>
std::vector<Partial> parallel_shots(uint64_t shots, Body body) {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<uint64_t>(workers, std::max<uint64_t>(1, shots / 256)));
    std::vector<Partial> partials(workers);
    std::vector<std::thread> threads;
    const uint64_t chunk = (shots + workers - 1) / workers;
    for (unsigned w = 0; w < workers; w++) {
        const uint64_t begin = std::min<uint64_t>(shots, w * chunk);
        const uint64_t end = std::min<uint64_t>(shots, begin + chunk);
        if (w + 1 == workers) {
            body(begin, end, partials[w]);
        } else {
            threads.emplace_back([&, begin, end, w] { body(begin, end, partials[w]); });
        }
    }
    for (auto &t : threads) {
        t.join();
    }
    return partials;
}

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

}  // namespace

std::vector<Table1Row> table1(std::size_t n_max, bool simulate) {
    if (n_max < 2 || n_max > 12) {
        throw std::invalid_argument("table1: n_max must be in [2, 12]");
    }
    std::vector<Table1Row> rows;
    for (std::size_t n = 2; n <= n_max; n++) {
        Table1Row row;
        row.n = n;
        row.N = uint64_t{1} << n;
        row.max_p = 0;
        row.min_p = 1;
        for (uint64_t m = 1; m <= row.N; m++) {
            const double p = p_success_once(row.N, m);
            row.max_p = std::max(row.max_p, p);
            row.min_p = std::min(row.min_p, p);
        }
        row.avg_p = average_p_once(row.N);
        row.avg_alt_closed_form = average_p_once_alt_closed_form(row.N);
        if (simulate) {
            double lo = 1, hi = 0, avg = 0;
            const double Nd = static_cast<double>(row.N);
            const double log_scale = std::lgamma(Nd + 1.0) - Nd * std::log(2.0);
            for (uint64_t m = 1; m <= row.N; m++) {
                const double md = static_cast<double>(m);
                const double weight = std::exp(log_scale - std::lgamma(md + 1.0) - std::lgamma(Nd - md + 1.0));
                std::vector<uint64_t> marked(m);
                for (uint64_t i = 0; i < m; i++) {
                    marked[i] = i;
                }
                auto prepared = younes_once(CountingOracle(OracleSpec(n, std::move(marked))));
                const double p = success_probability(prepared);
                lo = std::min(lo, p);
                hi = std::max(hi, p);
                avg += weight * p;
            }
            row.sim_max_p = hi;
            row.sim_min_p = lo;
            row.sim_avg_p = avg;
        }
        rows.push_back(row);
    }
    return rows;
}

CsvTable table1_csv(const std::vector<Table1Row> &rows) {
    CsvTable table;
    table.columns = {"n", "max_prob", "min_prob", "avg_prob", "avg_alt_closed_form"};
    const bool simulated = !rows.empty() && rows.front().sim_max_p.has_value();
    if (simulated) {
        table.columns.insert(table.columns.end(), {"sim_max_prob", "sim_min_prob", "sim_avg_prob"});
    }
    for (const auto &r : rows) {
        std::vector<double> values = {static_cast<double>(r.n), r.max_p, r.min_p, r.avg_p, r.avg_alt_closed_form};
        if (simulated) {
            values.insert(values.end(), {*r.sim_max_p, *r.sim_min_p, *r.sim_avg_p});
        }
        table.rows.push_back(std::move(values));
    }
    return table;
}

CsvTable sweep(int figure, std::size_t points) {
    if (points < 2) {
        throw std::invalid_argument("sweep: need at least 2 points");
    }
    CsvTable table;
    table.columns = {"ratio"};
    switch (figure) {
        case 5:
            table.columns.insert(table.columns.end(), {"p_younes", "p_grover_q1", "p_classical"});
            break;
        case 7:
            for (int q = 1; q <= 6; q++) {
                table.columns.push_back("p_younes_iter_q" + std::to_string(q));
            }
            break;
        case 8:
            for (int q = 1; q <= 5; q++) {
                table.columns.push_back("p_grover_q" + std::to_string(q));
            }
            for (int q = 1; q <= 5; q++) {
                table.columns.push_back("p_younes_iter_q" + std::to_string(q));
            }
            break;
        default:
            throw std::invalid_argument("sweep: figure must be 5, 7 or 8");
    }
    for (std::size_t k = 1; k <= points; k++) {
        const double x = static_cast<double>(k) / static_cast<double>(points);
        std::vector<double> row = {x};
        if (figure == 5) {
            row.insert(row.end(), {p_success_once_ratio(x), p_grover_ratio(x, 1), x});
        } else if (figure == 7) {
            for (std::size_t q = 1; q <= 6; q++) {
                row.push_back(p_success_iterated_ratio(x, q));
            }
        } else {
            for (std::size_t q = 1; q <= 5; q++) {
                row.push_back(p_grover_ratio(x, q));
            }
            for (std::size_t q = 1; q <= 5; q++) {
                row.push_back(p_success_iterated_ratio(x, q));
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_csv(std::ostream &out, const CsvTable &table) {
    for (std::size_t c = 0; c < table.columns.size(); c++) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t c = 0; c < row.size(); c++) {
            out << (c ? "," : "") << format_number(row[c]);
        }
        out << '\n';
    }
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "younes") {
        return Algorithm::kYounes;
    }
    if (name == "younes-iter") {
        return Algorithm::kYounesIterated;
    }
    if (name == "grover") {
        return Algorithm::kGrover;
    }
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::string_view algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::kYounes:
            return "younes";
        case Algorithm::kYounesIterated:
            return "younes-iter";
        case Algorithm::kGrover:
            return "grover";
    }
    throw std::invalid_argument("unknown algorithm");
}

nlohmann::ordered_json SimulationReport::to_json() const {
    nlohmann::ordered_json j;
    j["algorithm"] = algorithm;
    j["n"] = n;
    j["m"] = m;
    j["q"] = q;
    j["seed"] = seed;
    j["shots"] = shots;
    j["successes"] = successes;
    j["success_rate"] = success_rate;
    j["predicted"] = predicted;
    j["oracle_calls"] = oracle_calls;
    return j;
}

SimulationReport simulate(const ExperimentConfig &config) {
    if (config.shots == 0) {
        throw std::invalid_argument("simulate: shots must be at least 1");
    }
    OracleSpec spec = parse_marked_spec(config.marked_spec, config.n);
    const uint64_t N = spec.size();
    const uint64_t M = spec.num_marked();

    std::size_t q = 1;
    double predicted = 0;
    PreparedSearchState prepared = [&] {
        switch (config.algorithm) {
            case Algorithm::kYounes:
                predicted = p_success_once(N, M);
                return younes_once(CountingOracle(spec));
            case Algorithm::kYounesIterated:
                q = config.q.value_or(1);
                predicted = p_success_iterated(N, M, q);
                return younes_iterated(CountingOracle(spec), q);
            case Algorithm::kGrover:
                q = config.q.value_or(M == 0 ? 0 : grover_iteration_count(N, M));
                predicted = M == 0 ? 0.0 : p_grover(N, M, q);
                return grover(CountingOracle(spec), q);
        }
        throw std::invalid_argument("simulate: unknown algorithm");
    }();

    const auto marginal = prepared.state.marginal_probabilities(prepared.n);
    std::vector<double> cumulative(marginal.size());
    double running = 0;
    for (std::size_t i = 0; i < marginal.size(); i++) {
        running += marginal[i];
        cumulative[i] = running;
    }
    if (!(running > 0)) {
        throw InvariantViolation("simulate: marginal distribution is empty");
    }

    struct Partial {
        uint64_t successes = 0;
    };
    auto partials = parallel_shots<Partial>(config.shots, [&](uint64_t begin, uint64_t end, Partial &acc) {
        for (uint64_t shot = begin; shot < end; shot++) {
            Rng rng = Rng::for_stream(config.seed, shot);
            const double target = rng.uniform() * running;
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
            if (it == cumulative.end()) {
                --it;
            }
            if (spec.evaluate(static_cast<uint64_t>(it - cumulative.begin()))) {
                acc.successes++;
            }
        }
    });

    SimulationReport report;
    report.algorithm = std::string(algorithm_name(config.algorithm));
    report.n = config.n;
    report.m = M;
    report.q = q;
    report.seed = config.seed;
    report.shots = config.shots;
    for (const auto &p : partials) {
        report.successes += p.successes;
    }
    report.success_rate = static_cast<double>(report.successes) / static_cast<double>(config.shots);
    report.predicted = predicted;
    report.oracle_calls = prepared.oracle.superposed_calls() * config.shots;
    return report;
}

nlohmann::ordered_json HybridReport::to_json() const {
    nlohmann::ordered_json j;
    j["mode"] = known_m ? "known-m" : "unknown-m";
    j["n"] = n;
    j["m"] = m;
    j["seed"] = seed;
    j["shots"] = shots;
    j["successes"] = successes;
    j["success_rate"] = success_rate;
    j["predicted_first_attempt"] = predicted_first_attempt;
    j["mean_oracle_calls"] = mean_oracle_calls;
    j["mean_classical_checks"] = mean_classical_checks;
    j["max_oracle_calls"] = max_oracle_calls;
    j["oracle_call_budget"] = oracle_call_budget;
    j["branches"] = {
        {"younes-once", branch_younes_once},
        {"younes-iterated", branch_younes_iterated},
        {"grover", branch_grover},
        {"hybrid-fallback", branch_fallback},
    };
    return j;
}

HybridReport hybrid_bench(const ExperimentConfig &config, bool known_m, HybridPolicy policy) {
    if (config.shots == 0) {
        throw std::invalid_argument("hybrid_bench: shots must be at least 1");
    }
    OracleSpec spec = parse_marked_spec(config.marked_spec, config.n);
    const uint64_t N = spec.size();
    const uint64_t M = spec.num_marked();
    if (known_m) {
        policy.known_m = M;
    } else {
        policy.known_m.reset();
    }
    policy.validate();

    HybridReport report;
    report.known_m = known_m;
    report.n = config.n;
    report.m = M;
    report.seed = config.seed;
    report.shots = config.shots;
    if (known_m) {
        const Branch branch = dispatch_known(N, M);
        report.predicted_first_attempt =
            branch == Branch::kGrover ? p_grover(N, M, grover_iteration_count(N, M)) : p_success_once(N, M);
        const uint64_t per_attempt = branch == Branch::kGrover ? grover_iteration_count(N, M) : 1;
        report.oracle_call_budget = per_attempt * policy.verify_retries;
    } else {
        report.predicted_first_attempt = p_success_iterated(N, M, policy.younes_q);
        report.oracle_call_budget = policy.younes_q + policy.fallback_cap_for(N);
    }

    struct Partial {
        uint64_t successes = 0;
        uint64_t calls = 0;
        uint64_t checks = 0;
        uint64_t max_calls = 0;
        uint64_t branches[4] = {0, 0, 0, 0};
    };
    auto partials = parallel_shots<Partial>(config.shots, [&](uint64_t begin, uint64_t end, Partial &acc) {
        for (uint64_t shot = begin; shot < end; shot++) {
            Rng rng = Rng::for_stream(config.seed, shot);
            CountingOracle oracle(spec);
            RunResult r = search(oracle, policy, rng);
            acc.successes += r.is_solution ? 1 : 0;
            acc.calls += r.oracle_calls;
            acc.checks += r.classical_checks;
            acc.max_calls = std::max(acc.max_calls, r.oracle_calls);
            acc.branches[static_cast<int>(r.branch)]++;
        }
    });

    uint64_t calls = 0, checks = 0;
    for (const auto &p : partials) {
        report.successes += p.successes;
        calls += p.calls;
        checks += p.checks;
        report.max_oracle_calls = std::max(report.max_oracle_calls, p.max_calls);
        report.branch_younes_once += p.branches[static_cast<int>(Branch::kYounesOnce)];
        report.branch_younes_iterated += p.branches[static_cast<int>(Branch::kYounesIterated)];
        report.branch_grover += p.branches[static_cast<int>(Branch::kGrover)];
        report.branch_fallback += p.branches[static_cast<int>(Branch::kHybridFallback)];
    }
    const double shots = static_cast<double>(config.shots);
    report.success_rate = static_cast<double>(report.successes) / shots;
    report.mean_oracle_calls = static_cast<double>(calls) / shots;
    report.mean_classical_checks = static_cast<double>(checks) / shots;
    return report;
}

nlohmann::ordered_json predict(std::string_view model, std::size_t n, std::optional<uint64_t> m,
                               std::optional<std::size_t> q) {
    if (n == 0 || n > 62) {
        throw std::invalid_argument("predict: n must be in [1, 62]");
    }
    const uint64_t N = uint64_t{1} << n;
    nlohmann::ordered_json j;
    j["model"] = std::string(model);
    j["n"] = n;
    j["N"] = N;
    auto need_m = [&]() {
        if (!m) {
            throw std::invalid_argument("predict: model '" + std::string(model) + "' needs --m");
        }
        if (*m > N) {
            throw std::out_of_range("predict: m exceeds N");
        }
        j["m"] = *m;
        return *m;
    };

    if (model == "younes") {
        const uint64_t M = need_m();
        auto amps = one_shot_amplitudes(N, M);
        j["q"] = 1;
        j["a"] = amps.a;
        j["b"] = amps.b;
        j["predicted"] = p_success_once(N, M);
    } else if (model == "younes-iter") {
        const uint64_t M = need_m();
        const std::size_t depth = q.value_or(1);
        j["q"] = depth;
        j["predicted"] = p_success_iterated(N, M, depth);
        if (M > 0 && 2 * M != N && M < N) {
            j["iterations_for_half_taylor"] = iterations_lower_bound(N, M, 0.5);
            j["iterations_for_half_exact"] = exact_iterations(N, M, 0.5);
        }
    } else if (model == "grover") {
        const uint64_t M = need_m();
        const std::size_t rounds = q.value_or(M == 0 ? 0 : grover_iteration_count(N, M));
        j["q"] = rounds;
        j["predicted"] = M == 0 ? 0.0 : p_grover(N, M, rounds);
    } else if (model == "classical") {
        if (m) {
            const uint64_t M = need_m();
            j["predicted"] = static_cast<double>(M) / static_cast<double>(N);
        } else {
            j["predicted"] = average_p_classical(N);
        }
    } else if (model == "average") {
        if (N > kMaxAverageSize) {
            throw std::invalid_argument("predict: average needs N <= 2^20");
        }
        j["predicted"] = average_p_once(N);
        j["alt_closed_form"] = average_p_once_alt_closed_form(N);
        j["one_minus_inverse_2N"] = 1.0 - 1.0 / (2.0 * static_cast<double>(N));
        j["classical_average"] = average_p_classical(N);
        if (q) {
            j["q"] = *q;
            j["grover_average"] = average_p_grover(N, *q);
        }
        j["note"] =
            "predicted is the binomially weighted summation; 1 - 2^-N is listed for "
            "comparison and does not match it";
    } else {
        throw std::invalid_argument("predict: unknown model '" + std::string(model) + "'");
    }
    return j;
}

}  // namespace qsearch

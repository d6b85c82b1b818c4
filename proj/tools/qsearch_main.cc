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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "qsearch/errors.h"
#include "qsearch/experiments.h"

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kSpecError = 2;
constexpr int kInternal = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qsearch: multi-match quantum search simulator and predictor"};
    app.require_subcommand(1);

    std::size_t n_max = 6;
    bool table_simulate = false;
    auto *table1 = app.add_subcommand("table1", "Per-size max/min/average success of the one-step algorithm (CSV)");
    table1->add_option("--n-max", n_max, "Largest register width")->check(CLI::Range(2, 12));
    table1->add_flag("--simulate", table_simulate, "Add columns computed by full circuit simulation");

    int figure = 5;
    std::size_t points = 101;
    std::string sweep_out;
    auto *sweep = app.add_subcommand("sweep", "Success-probability curves as a function of M/N (CSV)");
    sweep->add_option("--figure", figure, "5, 7 or 8")->required()->check(CLI::IsMember({5, 7, 8}));
    sweep->add_option("--points", points, "Number of ratios sampled on (0, 1]")->required()->check(CLI::Range(2, 1 << 24));
    sweep->add_option("--out", sweep_out, "Output CSV path")->required();

    std::string algorithm;
    std::size_t n = 0;
    std::string marked;
    std::optional<std::size_t> q;
    uint64_t seed = 0;
    uint64_t shots = 1;
    std::string json_path;
    auto *simulate = app.add_subcommand("simulate", "Seeded sampled runs of one algorithm (JSON)");
    simulate->add_option("--algorithm", algorithm, "younes | younes-iter | grover")
        ->required()
        ->check(CLI::IsMember({"younes", "younes-iter", "grover"}));
    simulate->add_option("--n", n, "Search register width")->required();
    simulate->add_option("--marked", marked, "Marked-set spec (list:, range:, first:, count:, file:)")->required();
    simulate->add_option("--q", q, "Iterations (younes-iter) or rounds (grover)");
    simulate->add_option("--seed", seed, "Master seed")->required();
    simulate->add_option("--shots", shots, "Number of shots")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--json", json_path, "Also write the report to this path");

    bool known_m = false;
    auto *hybrid = app.add_subcommand("hybrid", "Hybrid engine benchmark (JSON)");
    hybrid->add_option("--n", n, "Search register width")->required();
    hybrid->add_option("--marked", marked, "Marked-set spec")->required();
    hybrid->add_flag("--known-m", known_m, "Tell the engine the number of solutions");
    hybrid->add_option("--seed", seed, "Master seed")->required();
    hybrid->add_option("--shots", shots, "Number of shots")->required()->check(CLI::PositiveNumber);
    hybrid->add_option("--json", json_path, "Also write the report to this path");

    std::string model;
    std::optional<uint64_t> m;
    auto *predict = app.add_subcommand("predict", "Closed-form prediction (JSON)");
    predict->add_option("--model", model, "younes | younes-iter | grover | classical | average")
        ->required()
        ->check(CLI::IsMember({"younes", "younes-iter", "grover", "classical", "average"}));
    predict->add_option("--n", n, "Search register width")->required();
    predict->add_option("--m", m, "Number of marked items");
    predict->add_option("--q", q, "Iterations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*table1) {
            auto rows = qsearch::table1(n_max, table_simulate);
            qsearch::write_csv(std::cout, qsearch::table1_csv(rows));
        } else if (*sweep) {
            std::ofstream out(sweep_out, std::ios::binary);
            if (!out) {
                throw IoError("cannot open '" + sweep_out + "' for writing");
            }
            qsearch::write_csv(out, qsearch::sweep(figure, points));
            if (!out) {
                throw IoError("failed writing '" + sweep_out + "'");
            }
        } else if (*simulate) {
            qsearch::ExperimentConfig config;
            config.algorithm = qsearch::parse_algorithm(algorithm);
            config.n = n;
            config.marked_spec = marked;
            config.q = q;
            config.seed = seed;
            config.shots = shots;
            const std::string text = qsearch::simulate(config).to_json().dump(2) + "\n";
            std::cout << text;
            if (!json_path.empty()) {
                emit(text, json_path);
            }
        } else if (*hybrid) {
            qsearch::ExperimentConfig config;
            config.n = n;
            config.marked_spec = marked;
            config.seed = seed;
            config.shots = shots;
            const std::string text = qsearch::hybrid_bench(config, known_m).to_json().dump(2) + "\n";
            std::cout << text;
            if (!json_path.empty()) {
                emit(text, json_path);
            }
        } else if (*predict) {
            std::cout << qsearch::predict(model, n, m, q).dump(2) << "\n";
        }
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const qsearch::InvariantViolation &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const qsearch::CapacityError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSpecError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSpecError;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSpecError;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}

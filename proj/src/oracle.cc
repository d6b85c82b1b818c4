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

#include "qsearch/oracle.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "qsearch/errors.h"
#include "qsearch/rng.h"

namespace qsearch {

namespace {

constexpr std::size_t kMaxSearchQubits = 62;

void require_search_width(std::size_t n) {
    if (n == 0 || n > kMaxSearchQubits) {
        throw std::invalid_argument("search register width must be in [1, 62], got " + std::to_string(n));
    }
}

/// Cursor over a spec string that reports absolute offsets in errors.
struct Scanner {
    std::string_view text;
    std::size_t pos;

    bool done() const {
        return pos >= text.size();
    }

    uint64_t number(const char *what) {
        const char *begin = text.data() + pos;
        const char *end = text.data() + text.size();
        uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec == std::errc::result_out_of_range) {
            throw ParseError(std::string("number too large for ") + what, pos);
        }
        if (ec != std::errc() || ptr == begin) {
            throw ParseError(std::string("expected a decimal ") + what, pos);
        }
        pos += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    void expect(std::string_view token) {
        if (text.substr(pos, token.size()) != token) {
            throw ParseError("expected '" + std::string(token) + "'", pos);
        }
        pos += token.size();
    }

    void expect_end() {
        if (!done()) {
            throw ParseError("unexpected trailing characters", pos);
        }
    }
};

void require_in_range(uint64_t index, std::size_t n) {
    if (index >= (uint64_t{1} << n)) {
        throw std::out_of_range("marked index " + std::to_string(index) + " is outside [0, 2^" + std::to_string(n) +
                                ")");
    }
}

OracleSpec from_unique(std::vector<uint64_t> indices, std::size_t n, std::size_t position) {
    std::sort(indices.begin(), indices.end());
    auto dup = std::adjacent_find(indices.begin(), indices.end());
    if (dup != indices.end()) {
        throw ParseError("duplicate marked index " + std::to_string(*dup), position);
    }
    return OracleSpec(n, std::move(indices));
}

OracleSpec parse_file(const std::string &path, std::size_t n, std::size_t position) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open marked-index file '" + path + "'", position);
    }
    std::vector<uint64_t> indices;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        std::string_view body(line.data() + first, last - first + 1);
        uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
        if (ec != std::errc() || ptr != body.data() + body.size()) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": expected one decimal index per line", first);
        }
        require_in_range(value, n);
        indices.push_back(value);
    }
    return from_unique(std::move(indices), n, position);
}

}  // namespace

OracleSpec::OracleSpec(std::size_t n, std::vector<uint64_t> marked) : n_(n) {
    require_search_width(n);
    std::sort(marked.begin(), marked.end());
    if (std::adjacent_find(marked.begin(), marked.end()) != marked.end()) {
        throw std::invalid_argument("OracleSpec: marked indices must be unique");
    }
    if (!marked.empty()) {
        require_in_range(marked.back(), n);
    }
    marked_ = std::make_shared<const std::vector<uint64_t>>(std::move(marked));
}

bool OracleSpec::evaluate(uint64_t i) const {
    if (i >= size()) {
        throw std::out_of_range("evaluate: index " + std::to_string(i) + " outside the search space");
    }
    return std::binary_search(marked_->begin(), marked_->end(), i);
}

StateVector &apply_bit_oracle(StateVector &state, CountingOracle &oracle, std::size_t target) {
    const std::size_t n = oracle.spec().n();
    if (state.num_qubits() <= n) {
        throw std::invalid_argument("apply_bit_oracle: register has no workspace qubits");
    }
    if (target < n) {
        throw std::invalid_argument("apply_bit_oracle: target qubit " + std::to_string(target) +
                                    " lies inside the search register");
    }
    if (target >= state.num_qubits()) {
        throw std::out_of_range("apply_bit_oracle: target qubit out of range");
    }
    const std::size_t workspace = state.num_qubits() - n;
    const std::size_t block = std::size_t{1} << workspace;
    const std::size_t mask = std::size_t{1} << (state.num_qubits() - 1 - target);
    auto amps = state.amplitudes();
    for (uint64_t i : oracle.spec().marked()) {
        const std::size_t base = static_cast<std::size_t>(i) * block;
        for (std::size_t w = 0; w < block; w++) {
            if (!(w & mask)) {
                std::swap(amps[base + w], amps[base + (w | mask)]);
            }
        }
    }
    oracle.record_superposed_call();
    return state;
}

StateVector &apply_phase_oracle(StateVector &state, CountingOracle &oracle) {
    const std::size_t n = oracle.spec().n();
    if (state.num_qubits() < n) {
        throw std::invalid_argument("apply_phase_oracle: register narrower than the search space");
    }
    const std::size_t block = std::size_t{1} << (state.num_qubits() - n);
    auto amps = state.amplitudes();
    for (uint64_t i : oracle.spec().marked()) {
        const std::size_t base = static_cast<std::size_t>(i) * block;
        for (std::size_t w = 0; w < block; w++) {
            amps[base + w] = -amps[base + w];
        }
    }
    oracle.record_superposed_call();
    return state;
}

OracleSpec parse_marked_spec(std::string_view text, std::size_t n) {
    require_search_width(n);
    if (text.empty()) {
        throw ParseError("empty marked-set specification", 0);
    }
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("expected '<kind>:' prefix (list, range, first, count, file)", 0);
    }
    std::string_view kind = text.substr(0, colon);
    Scanner s{text, colon + 1};

    if (kind == "list") {
        std::vector<uint64_t> indices;
        if (!s.done()) {
            while (true) {
                std::size_t at = s.pos;
                uint64_t v = s.number("index");
                require_in_range(v, n);
                if (std::find(indices.begin(), indices.end(), v) != indices.end()) {
                    throw ParseError("duplicate marked index " + std::to_string(v), at);
                }
                indices.push_back(v);
                if (s.done()) {
                    break;
                }
                s.expect(",");
            }
        }
        return OracleSpec(n, std::move(indices));
    }
    if (kind == "range") {
        uint64_t a = s.number("range start");
        s.expect("-");
        std::size_t at_b = s.pos;
        uint64_t b = s.number("range end");
        s.expect_end();
        if (b < a) {
            throw ParseError("range end precedes range start", at_b);
        }
        require_in_range(b, n);
        std::vector<uint64_t> indices;
        indices.reserve(static_cast<std::size_t>(b - a + 1));
        for (uint64_t v = a; v <= b; v++) {
            indices.push_back(v);
        }
        return OracleSpec(n, std::move(indices));
    }
    if (kind == "first") {
        uint64_t m = s.number("count");
        s.expect_end();
        if (m > (uint64_t{1} << n)) {
            throw std::out_of_range("first:" + std::to_string(m) + " exceeds the search space size");
        }
        std::vector<uint64_t> indices(static_cast<std::size_t>(m));
        for (uint64_t v = 0; v < m; v++) {
            indices[v] = v;
        }
        return OracleSpec(n, std::move(indices));
    }
    if (kind == "count") {
        uint64_t m = s.number("count");
        s.expect(":seed:");
        uint64_t seed = s.number("seed");
        s.expect_end();
        if (m > (uint64_t{1} << n)) {
            throw std::out_of_range("count:" + std::to_string(m) + " exceeds the search space size");
        }
        return random_oracle(n, m, seed);
    }
    if (kind == "file") {
        std::string path(text.substr(colon + 1));
        if (path.empty()) {
            throw ParseError("missing file path", colon + 1);
        }
        return parse_file(path, n, colon + 1);
    }
    throw ParseError("unknown marked-set kind '" + std::string(kind) + "'", 0);
}

OracleSpec random_oracle(std::size_t n, uint64_t num_marked, uint64_t seed) {
    require_search_width(n);
    const uint64_t size = uint64_t{1} << n;
    if (num_marked > size) {
        throw std::invalid_argument("random_oracle: M = " + std::to_string(num_marked) + " exceeds N = " +
                                    std::to_string(size));
    }
    // Floyd's sampling: M draws, no rejection loop, O(M) memory.
    Rng rng(seed);
    std::unordered_set<uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(num_marked));
    for (uint64_t j = size - num_marked; j < size; j++) {
        uint64_t t = rng.uniform_below(j + 1);
        if (!chosen.insert(t).second) {
            chosen.insert(j);
        }
    }
    return OracleSpec(n, std::vector<uint64_t>(chosen.begin(), chosen.end()));
}

}  // namespace qsearch

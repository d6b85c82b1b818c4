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

#include "qsearch/state_vector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qsearch/errors.h"

namespace qsearch {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr std::size_t kMaxDenseArity = 10;

void require_qubit(std::size_t qubit, std::size_t num_qubits, const char *op) {
    if (qubit >= num_qubits) {
        throw std::out_of_range(std::string(op) + ": qubit " + std::to_string(qubit) +
                                " out of range for a " + std::to_string(num_qubits) + "-qubit register");
    }
}

}  // namespace

std::size_t max_qubits() {
    const char *env = std::getenv("QSEARCH_MAX_QUBITS");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaxQubits;
    }
    char *end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (*end != '\0' || value == 0) {
        return kDefaultMaxQubits;
    }
    return std::min<std::size_t>(value, kAbsoluteMaxQubits);
}

DenseMatrix::DenseMatrix(std::size_t dim, std::vector<Amplitude> entries) : dim(dim), data(std::move(entries)) {
    if (data.size() != dim * dim) {
        throw std::invalid_argument("DenseMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                                    std::to_string(data.size()));
    }
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t k = 0; k < dim; k++) {
        m(k, k) = 1;
    }
    return m;
}

DenseMatrix DenseMatrix::pauli_x() {
    return DenseMatrix(2, {0, 1, 1, 0});
}

DenseMatrix DenseMatrix::hadamard() {
    return DenseMatrix(2, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2});
}

double DenseMatrix::unitarity_error() const {
    double worst = 0;
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            Amplitude acc = 0;
            for (std::size_t k = 0; k < dim; k++) {
                acc += std::conj((*this)(k, r)) * (*this)(k, c);
            }
            if (r == c) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

StateVector StateVector::zero(std::size_t num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("StateVector::zero: need at least one qubit");
    }
    if (num_qubits > max_qubits()) {
        throw CapacityError("StateVector::zero: " + std::to_string(num_qubits) + " qubits exceeds the limit of " +
                            std::to_string(max_qubits()));
    }
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
    amps[0] = 1;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const std::size_t size = amplitudes.size();
    if (size < 2 || (size & (size - 1)) != 0) {
        throw std::invalid_argument("StateVector::from_amplitudes: length must be a power of two >= 2");
    }
    std::size_t num_qubits = static_cast<std::size_t>(std::countr_zero(size));
    if (num_qubits > max_qubits()) {
        throw CapacityError("StateVector::from_amplitudes: register too wide");
    }
    StateVector state(num_qubits, std::move(amplitudes));
    state.check_normalized("from_amplitudes");
    return state;
}

std::size_t StateVector::bit_of(std::size_t qubit) const {
    return num_qubits_ - 1 - qubit;
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::check_normalized(const char *context, double tolerance) const {
    double norm = norm_squared();
    if (!(std::abs(norm - 1.0) <= tolerance)) {
        throw InvariantViolation(std::string(context) + ": squared norm drifted to " + std::to_string(norm));
    }
}

void StateVector::debug_check(const char *context) const {
#ifdef QSEARCH_DEBUG_CHECKS
    check_normalized(context);
#else
    (void)context;
#endif
}

StateVector &StateVector::apply_x(std::size_t qubit) {
    require_qubit(qubit, num_qubits_, "apply_x");
    const std::size_t mask = std::size_t{1} << bit_of(qubit);
    for (std::size_t k = 0; k < amplitudes_.size(); k++) {
        if (!(k & mask)) {
            std::swap(amplitudes_[k], amplitudes_[k | mask]);
        }
    }
    debug_check("apply_x");
    return *this;
}

StateVector &StateVector::apply_hadamard(std::size_t qubit) {
    require_qubit(qubit, num_qubits_, "apply_hadamard");
    const std::size_t mask = std::size_t{1} << bit_of(qubit);
    for (std::size_t k = 0; k < amplitudes_.size(); k++) {
        if (!(k & mask)) {
            Amplitude a0 = amplitudes_[k];
            Amplitude a1 = amplitudes_[k | mask];
            amplitudes_[k] = (a0 + a1) * kInvSqrt2;
            amplitudes_[k | mask] = (a0 - a1) * kInvSqrt2;
        }
    }
    debug_check("apply_hadamard");
    return *this;
}

StateVector &StateVector::apply_hadamard_range(std::size_t first, std::size_t last) {
    if (first > last || last > num_qubits_) {
        throw std::out_of_range("apply_hadamard_range: [" + std::to_string(first) + ", " + std::to_string(last) +
                                ") is not inside the register");
    }
    for (std::size_t q = first; q < last; q++) {
        apply_hadamard(q);
    }
    return *this;
}

StateVector &StateVector::apply_controlled_not(std::span<const std::size_t> controls, std::size_t target) {
    require_qubit(target, num_qubits_, "apply_controlled_not");
    std::size_t control_mask = 0;
    for (std::size_t c : controls) {
        require_qubit(c, num_qubits_, "apply_controlled_not");
        if (c == target) {
            throw std::invalid_argument("apply_controlled_not: control and target overlap on qubit " +
                                        std::to_string(c));
        }
        std::size_t bit = std::size_t{1} << bit_of(c);
        if (control_mask & bit) {
            throw std::invalid_argument("apply_controlled_not: duplicate control qubit " + std::to_string(c));
        }
        control_mask |= bit;
    }
    const std::size_t target_mask = std::size_t{1} << bit_of(target);
    for (std::size_t k = 0; k < amplitudes_.size(); k++) {
        if (!(k & target_mask) && (k & control_mask) == control_mask) {
            std::swap(amplitudes_[k], amplitudes_[k | target_mask]);
        }
    }
    debug_check("apply_controlled_not");
    return *this;
}

StateVector &StateVector::apply_unitary(const DenseMatrix &matrix, std::span<const std::size_t> qubits) {
    const std::size_t m = qubits.size();
    if (m == 0 || m > kMaxDenseArity) {
        throw std::invalid_argument("apply_unitary: needs between 1 and 10 target qubits");
    }
    if (matrix.dim != (std::size_t{1} << m) || matrix.data.size() != matrix.dim * matrix.dim) {
        throw std::invalid_argument("apply_unitary: matrix dimension does not match 2^" + std::to_string(m));
    }
    std::size_t target_mask = 0;
    std::vector<std::size_t> bit_masks(m);
    for (std::size_t j = 0; j < m; j++) {
        require_qubit(qubits[j], num_qubits_, "apply_unitary");
        bit_masks[j] = std::size_t{1} << bit_of(qubits[j]);
        if (target_mask & bit_masks[j]) {
            throw std::invalid_argument("apply_unitary: duplicate qubit " + std::to_string(qubits[j]));
        }
        target_mask |= bit_masks[j];
    }
    if (matrix.unitarity_error() > 1e-10) {
        throw std::invalid_argument("apply_unitary: matrix is not unitary within 1e-10");
    }

    const std::size_t dim = matrix.dim;
    std::vector<std::size_t> offsets(dim, 0);
    for (std::size_t local = 0; local < dim; local++) {
        for (std::size_t j = 0; j < m; j++) {
            if (local & (std::size_t{1} << (m - 1 - j))) {
                offsets[local] |= bit_masks[j];
            }
        }
    }
    std::vector<Amplitude> in(dim);
    for (std::size_t base = 0; base < amplitudes_.size(); base++) {
        if (base & target_mask) {
            continue;
        }
        for (std::size_t c = 0; c < dim; c++) {
            in[c] = amplitudes_[base | offsets[c]];
        }
        for (std::size_t r = 0; r < dim; r++) {
            Amplitude acc = 0;
            for (std::size_t c = 0; c < dim; c++) {
                acc += matrix(r, c) * in[c];
            }
            amplitudes_[base | offsets[r]] = acc;
        }
    }
    debug_check("apply_unitary");
    return *this;
}

StateVector &StateVector::append_qubit() {
    if (num_qubits_ + 1 > max_qubits()) {
        throw CapacityError("append_qubit: " + std::to_string(num_qubits_ + 1) + " qubits exceeds the limit of " +
                            std::to_string(max_qubits()));
    }
    std::vector<Amplitude> grown(amplitudes_.size() * 2);
    for (std::size_t k = 0; k < amplitudes_.size(); k++) {
        grown[2 * k] = amplitudes_[k];
    }
    amplitudes_ = std::move(grown);
    num_qubits_++;
    return *this;
}

std::vector<double> StateVector::marginal_probabilities(std::size_t first_n) const {
    if (first_n > num_qubits_) {
        throw std::out_of_range("marginal_probabilities: first_n exceeds register width");
    }
    const std::size_t block = std::size_t{1} << (num_qubits_ - first_n);
    std::vector<double> probs(std::size_t{1} << first_n, 0.0);
    for (std::size_t i = 0; i < probs.size(); i++) {
        double acc = 0;
        for (std::size_t w = 0; w < block; w++) {
            acc += std::norm(amplitudes_[i * block + w]);
        }
        probs[i] = acc;
    }
    return probs;
}

std::size_t StateVector::measure_first_n(std::size_t first_n, Rng &rng) {
    auto probs = marginal_probabilities(first_n);
    std::size_t outcome = sample_index(probs, rng);
    const std::size_t block = std::size_t{1} << (num_qubits_ - first_n);
    const double scale = 1.0 / std::sqrt(probs[outcome]);
    for (std::size_t k = 0; k < amplitudes_.size(); k++) {
        if (k / block == outcome) {
            amplitudes_[k] *= scale;
        } else {
            amplitudes_[k] = 0;
        }
    }
    debug_check("measure_first_n");
    return outcome;
}

std::size_t sample_index(std::span<const double> probabilities, Rng &rng) {
    double total = 0;
    std::size_t last_nonzero = probabilities.size();
    for (std::size_t k = 0; k < probabilities.size(); k++) {
        total += probabilities[k];
        if (probabilities[k] > 0) {
            last_nonzero = k;
        }
    }
    if (!(total > 0) || last_nonzero == probabilities.size()) {
        throw InvariantViolation("sample_index: all probabilities are zero");
    }
    const double target = rng.uniform() * total;
    double running = 0;
    for (std::size_t k = 0; k < probabilities.size(); k++) {
        running += probabilities[k];
        if (target < running && probabilities[k] > 0) {
            return k;
        }
    }
    return last_nonzero;
}

}  // namespace qsearch

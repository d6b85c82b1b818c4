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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qsearch/rng.h"

namespace qsearch {

using Amplitude = std::complex<double>;

/// Default register width limit; QSEARCH_MAX_QUBITS overrides it.
constexpr std::size_t kDefaultMaxQubits = 24;
/// Hard ceiling regardless of the environment override.
constexpr std::size_t kAbsoluteMaxQubits = 40;

/// Current register width limit (reads QSEARCH_MAX_QUBITS on every call).
std::size_t max_qubits();

/// Square complex matrix, row-major.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<Amplitude> data;

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim) : dim(dim), data(dim * dim) {
    }
    DenseMatrix(std::size_t dim, std::vector<Amplitude> entries);

    Amplitude &operator()(std::size_t row, std::size_t col) {
        return data[row * dim + col];
    }
    const Amplitude &operator()(std::size_t row, std::size_t col) const {
        return data[row * dim + col];
    }

    static DenseMatrix identity(std::size_t dim);
    static DenseMatrix pauli_x();
    static DenseMatrix hadamard();

    /// max |(U^dagger U - I)_{rc}|.
    double unitarity_error() const;
};

/// Dense register of 2^num_qubits complex amplitudes.
///
/// Bit order: basis index k is read most-significant-bit first. Qubit 0 is the
/// MSB, so "the first n qubits" are the n high bits of k. A qubit appended with
/// `append_qubit` becomes the new least significant bit: the joint state
/// |i> (x) |w> of an n-qubit register i and one workspace qubit w lives at
/// index 2*i + w.
///
/// Gates mutate in place and return *this. When built with
/// QSEARCH_DEBUG_CHECKS every gate re-checks that the squared norm is 1 within
/// 1e-10 and throws InvariantViolation otherwise. Normalization is never
/// silently re-imposed.
class StateVector {
   public:
    /// |0...0> on `num_qubits` qubits. Throws std::invalid_argument for zero
    /// qubits and CapacityError above `max_qubits()`.
    static StateVector zero(std::size_t num_qubits);

    /// Takes ownership of explicit amplitudes. The length must be a power of
    /// two; normalization is checked within 1e-10.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::size_t size() const {
        return amplitudes_.size();
    }
    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }
    std::span<Amplitude> amplitudes() {
        return amplitudes_;
    }
    const Amplitude &operator[](std::size_t k) const {
        return amplitudes_[k];
    }
    Amplitude &operator[](std::size_t k) {
        return amplitudes_[k];
    }

    StateVector clone() const {
        return *this;
    }

    StateVector &apply_x(std::size_t qubit);
    StateVector &apply_hadamard(std::size_t qubit);
    /// Hadamard on every qubit in [first, last).
    StateVector &apply_hadamard_range(std::size_t first, std::size_t last);
    /// Flips `target` on basis states whose control bits are all 1.
    StateVector &apply_controlled_not(std::span<const std::size_t> controls, std::size_t target);
    /// Applies `matrix` (2^m x 2^m, m = qubits.size() <= 10) to `qubits`, with
    /// qubits[0] as the most significant bit of the matrix index.
    StateVector &apply_unitary(const DenseMatrix &matrix, std::span<const std::size_t> qubits);

    /// Appends a fresh |0> qubit as the new least significant bit.
    StateVector &append_qubit();

    /// Probability of each pattern of the first `first_n` qubits, summed over
    /// every pattern of the remaining qubits.
    std::vector<double> marginal_probabilities(std::size_t first_n) const;

    /// Samples the first `first_n` qubits, collapses the state onto the
    /// observed prefix and re-normalizes. Returns the observed prefix.
    std::size_t measure_first_n(std::size_t first_n, Rng &rng);

    double norm_squared() const;

    /// Throws InvariantViolation if |norm^2 - 1| > tolerance.
    void check_normalized(const char *context, double tolerance = 1e-10) const;

   private:
    StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes)
        : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    }

    std::size_t bit_of(std::size_t qubit) const;
    void debug_check(const char *context) const;

    std::size_t num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// Draws an index from a (not necessarily normalized) probability vector.
/// Throws InvariantViolation when every entry is zero.
std::size_t sample_index(std::span<const double> probabilities, Rng &rng);

}  // namespace qsearch

// Copyright 2026 The groverlab Authors
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

#ifndef GROVERLAB_STATE_VECTOR_H
#define GROVERLAB_STATE_VECTOR_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace groverlab {

using Amplitude = std::complex<double>;

inline constexpr int kDefaultQubitCap = 26;

/// Name of the environment variable that overrides the qubit cap.
inline constexpr const char *kQubitCapEnvVar = "GROVERLAB_MAX_QUBITS";

/// The qubit cap in effect: `GROVERLAB_MAX_QUBITS` when set to a positive
/// integer, otherwise kDefaultQubitCap.
int default_qubit_cap();

/// Dense vector of 2^q amplitudes. Qubit k is bit k of the basis index
/// (little-endian), so amplitude i belongs to the basis state whose k-th qubit
/// reads (i >> k) & 1.
class StateVector {
   public:
    /// |index> on `num_qubits` qubits. Throws CapacityError when num_qubits is
    /// outside [1, qubit_cap] and DomainError when index >= 2^num_qubits.
    static StateVector basis(int num_qubits, std::uint64_t index, int qubit_cap = default_qubit_cap());

    /// Adopts `amplitudes` as-is (no normalization). The length must be a
    /// power of two >= 2.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes, int qubit_cap = default_qubit_cap());

    int num_qubits() const {
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
    const Amplitude &operator[](std::size_t index) const {
        return amplitudes_[index];
    }
    Amplitude &operator[](std::size_t index) {
        return amplitudes_[index];
    }

    /// Sum of |amplitude|^2.
    double norm_squared() const;

    bool operator==(const StateVector &other) const = default;

   private:
    StateVector(int num_qubits, std::vector<Amplitude> amplitudes);

    int num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// Counts oracle applications. Only ever grows.
class QueryLedger {
   public:
    void record() {
        ++queries_;
    }
    std::int64_t queries() const {
        return queries_;
    }

   private:
    std::int64_t queries_ = 0;
};

/// Largest |a_i - b_i| over all amplitudes; DomainError on size mismatch.
double max_amplitude_distance(const StateVector &a, const StateVector &b);

}  // namespace groverlab

#endif

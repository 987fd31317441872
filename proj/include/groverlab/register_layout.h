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

#ifndef GROVERLAB_REGISTER_LAYOUT_H
#define GROVERLAB_REGISTER_LAYOUT_H

#include <cstdint>
#include <vector>

#include "groverlab/state_vector.h"

namespace groverlab {

/// Partition of a register into an n-qubit index register, one flag qubit and
/// M ancilla registers of n qubits each:
///
///     qubits [0, n)                  index register
///     qubit  n                       flag
///     qubits [n+1+j*n, n+1+(j+1)*n)  ancilla register j
///
/// Every register is read little-endian, so its first qubit is the least
/// significant bit of its value.
class RegisterLayout {
   public:
    /// DomainError unless index_width >= 1 and ancilla_registers >= 0.
    RegisterLayout(int index_width, int ancilla_registers);

    int index_width() const {
        return index_width_;
    }
    int flag() const {
        return index_width_;
    }
    int ancilla_registers() const {
        return ancilla_registers_;
    }
    int total_qubits() const {
        return index_width_ + 1 + ancilla_registers_ * index_width_;
    }
    std::uint64_t index_dimension() const {
        return std::uint64_t{1} << index_width_;
    }

    std::vector<int> index_qubits() const;
    std::vector<int> ancilla_register(int j) const;
    /// All ancilla qubits, register 0 first.
    std::vector<int> ancilla_qubits() const;
    /// Flag followed by every ancilla qubit.
    std::vector<int> flag_and_ancilla_qubits() const;

    std::uint64_t index_mask() const {
        return index_dimension() - 1;
    }
    std::uint64_t flag_mask() const {
        return std::uint64_t{1} << flag();
    }

    /// DomainError when `state` does not have exactly total_qubits() qubits.
    void validate_for(const StateVector &state) const;

    bool operator==(const RegisterLayout &other) const = default;

   private:
    int index_width_;
    int ancilla_registers_;
};

}  // namespace groverlab

#endif

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

#include "groverlab/register_layout.h"

#include <string>

#include "groverlab/errors.h"

namespace groverlab {

RegisterLayout::RegisterLayout(int index_width, int ancilla_registers)
    : index_width_(index_width), ancilla_registers_(ancilla_registers) {
    if (index_width < 1 || index_width > 62) {
        throw DomainError("index register width must be in [1, 62], got " + std::to_string(index_width));
    }
    if (ancilla_registers < 0) {
        throw DomainError("ancilla register count must be non-negative");
    }
}

std::vector<int> RegisterLayout::index_qubits() const {
    std::vector<int> out(index_width_);
    for (int k = 0; k < index_width_; ++k) {
        out[k] = k;
    }
    return out;
}

std::vector<int> RegisterLayout::ancilla_register(int j) const {
    if (j < 0 || j >= ancilla_registers_) {
        throw DomainError("ancilla register " + std::to_string(j) + " does not exist");
    }
    std::vector<int> out(index_width_);
    int first = index_width_ + 1 + j * index_width_;
    for (int k = 0; k < index_width_; ++k) {
        out[k] = first + k;
    }
    return out;
}

std::vector<int> RegisterLayout::ancilla_qubits() const {
    std::vector<int> out;
    for (int q = index_width_ + 1; q < total_qubits(); ++q) {
        out.push_back(q);
    }
    return out;
}

std::vector<int> RegisterLayout::flag_and_ancilla_qubits() const {
    std::vector<int> out{flag()};
    auto rest = ancilla_qubits();
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

void RegisterLayout::validate_for(const StateVector &state) const {
    if (state.num_qubits() != total_qubits()) {
        throw DomainError("layout needs " + std::to_string(total_qubits()) + " qubits but state has " +
                          std::to_string(state.num_qubits()));
    }
}

}  // namespace groverlab

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

#include "groverlab/state_vector.h"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "groverlab/errors.h"

namespace groverlab {

int default_qubit_cap() {
    const char *raw = std::getenv(kQubitCapEnvVar);
    if (raw == nullptr) {
        return kDefaultQubitCap;
    }
    std::string_view text(raw);
    int cap = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec != std::errc() || ptr != text.data() + text.size() || cap < 1 || cap > 62) {
        return kDefaultQubitCap;
    }
    return cap;
}

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index, int qubit_cap) {
    if (num_qubits < 1 || num_qubits > qubit_cap) {
        throw CapacityError(
            "qubit count " + std::to_string(num_qubits) + " outside [1, " + std::to_string(qubit_cap) + "]");
    }
    std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (index >= dim) {
        throw DomainError("basis index " + std::to_string(index) + " out of range for " + std::to_string(num_qubits) +
                          " qubits");
    }
    std::vector<Amplitude> amplitudes(dim);
    amplitudes[index] = 1.0;
    return StateVector(num_qubits, std::move(amplitudes));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes, int qubit_cap) {
    std::size_t dim = amplitudes.size();
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw DomainError("amplitude count " + std::to_string(dim) + " is not a power of two >= 2");
    }
    int num_qubits = 0;
    while ((std::size_t{1} << num_qubits) < dim) {
        ++num_qubits;
    }
    if (num_qubits > qubit_cap) {
        throw CapacityError("qubit count " + std::to_string(num_qubits) + " exceeds cap " + std::to_string(qubit_cap));
    }
    return StateVector(num_qubits, std::move(amplitudes));
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

double max_amplitude_distance(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw DomainError("state sizes differ");
    }
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace groverlab

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

#include "groverlab/gates.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "groverlab/errors.h"

namespace groverlab {

namespace {

void check_qubits(const StateVector &state, std::span<const int> qubits) {
    for (std::size_t a = 0; a < qubits.size(); ++a) {
        if (qubits[a] < 0 || qubits[a] >= state.num_qubits()) {
            throw DomainError("qubit " + std::to_string(qubits[a]) + " out of range for " +
                              std::to_string(state.num_qubits()) + " qubits");
        }
        for (std::size_t b = 0; b < a; ++b) {
            if (qubits[a] == qubits[b]) {
                throw DomainError("qubit " + std::to_string(qubits[a]) + " used twice");
            }
        }
    }
}

std::uint64_t mask_of(std::span<const int> qubits) {
    std::uint64_t mask = 0;
    for (int q : qubits) {
        mask |= std::uint64_t{1} << q;
    }
    return mask;
}

/// Inserts a zero bit at each of `sorted_positions` (ascending) into `j`.
std::uint64_t insert_zeros(std::uint64_t j, std::span<const int> sorted_positions) {
    for (int p : sorted_positions) {
        std::uint64_t low = j & ((std::uint64_t{1} << p) - 1);
        j = low | ((j ^ low) << 1);
    }
    return j;
}

}  // namespace

void apply_h(StateVector &state, int qubit) {
    int q[] = {qubit};
    check_qubits(state, q);
    const double s = 1.0 / std::numbers::sqrt2;
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    const std::uint64_t half = state.size() / 2;
    auto amps = state.amplitudes();
    for (std::uint64_t j = 0; j < half; ++j) {
        std::uint64_t i0 = insert_zeros(j, q);
        std::uint64_t i1 = i0 | bit;
        Amplitude a = amps[i0];
        Amplitude b = amps[i1];
        amps[i0] = (a + b) * s;
        amps[i1] = (a - b) * s;
    }
}

void apply_x(StateVector &state, int qubit) {
    apply_mcx(state, {}, qubit);
}

void apply_z(StateVector &state, int qubit) {
    int q[] = {qubit};
    check_qubits(state, q);
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    const std::uint64_t half = state.size() / 2;
    auto amps = state.amplitudes();
    for (std::uint64_t j = 0; j < half; ++j) {
        std::uint64_t i1 = insert_zeros(j, q) | bit;
        amps[i1] = -amps[i1];
    }
}

void apply_cnot(StateVector &state, int control, int target) {
    int c[] = {control};
    apply_mcx(state, c, target);
}

void apply_ccx(StateVector &state, int control1, int control2, int target) {
    int c[] = {control1, control2};
    apply_mcx(state, c, target);
}

void apply_mcx(StateVector &state, std::span<const int> controls, int target) {
    std::vector<int> all(controls.begin(), controls.end());
    all.push_back(target);
    check_qubits(state, all);
    const std::uint64_t control_mask = mask_of(controls);
    const std::uint64_t bit = std::uint64_t{1} << target;
    std::sort(all.begin(), all.end());
    const std::uint64_t groups = state.size() >> all.size();
    auto amps = state.amplitudes();
    for (std::uint64_t j = 0; j < groups; ++j) {
        std::uint64_t i0 = insert_zeros(j, all) | control_mask;
        std::swap(amps[i0], amps[i0 | bit]);
    }
}

void apply_controlled_block(StateVector &state,
                            std::span<const int> controls,
                            std::span<const int> targets,
                            const Unitary &block) {
    if (targets.empty()) {
        throw DomainError("controlled block needs at least one target");
    }
    std::vector<int> all(controls.begin(), controls.end());
    all.insert(all.end(), targets.begin(), targets.end());
    check_qubits(state, all);
    const auto dim = static_cast<std::size_t>(1) << targets.size();
    if (block.rows() != static_cast<Eigen::Index>(dim) || block.cols() != static_cast<Eigen::Index>(dim)) {
        throw DomainError("block is " + std::to_string(block.rows()) + "x" + std::to_string(block.cols()) +
                          " but targets need " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    if (!is_unitary(block)) {
        throw ValidationError("block is not unitary within 1e-10 (defect " + std::to_string(unitarity_defect(block)) +
                              ")");
    }

    std::vector<std::uint64_t> offsets(dim, 0);
    for (std::size_t s = 0; s < dim; ++s) {
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if ((s >> t) & 1) {
                offsets[s] |= std::uint64_t{1} << targets[t];
            }
        }
    }
    std::vector<Amplitude> matrix(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            matrix[r * dim + c] = block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }

    const std::uint64_t control_mask = mask_of(controls);
    std::sort(all.begin(), all.end());
    const std::uint64_t groups = state.size() >> all.size();
    auto amps = state.amplitudes();
    std::vector<Amplitude> in(dim);
    for (std::uint64_t j = 0; j < groups; ++j) {
        std::uint64_t base = insert_zeros(j, all) | control_mask;
        bool any = false;
        for (std::size_t s = 0; s < dim; ++s) {
            in[s] = amps[base | offsets[s]];
            any = any || in[s] != Amplitude{};
        }
        if (!any) {
            continue;
        }
        for (std::size_t r = 0; r < dim; ++r) {
            Amplitude acc{};
            const Amplitude *row = &matrix[r * dim];
            for (std::size_t c = 0; c < dim; ++c) {
                acc += row[c] * in[c];
            }
            amps[base | offsets[r]] = acc;
        }
    }
}

void apply_oracle_flip(StateVector &state, const RegisterLayout &layout, std::uint64_t marked, QueryLedger &ledger) {
    layout.validate_for(state);
    if (marked >= layout.index_dimension()) {
        throw DomainError("marked index " + std::to_string(marked) + " out of range for a " +
                          std::to_string(layout.index_width()) + "-qubit index register");
    }
    // The free qubits are the ancillas; the index register is pinned to `marked`.
    std::vector<int> pinned = layout.index_qubits();
    pinned.push_back(layout.flag());
    const std::uint64_t groups = state.size() >> pinned.size();
    const std::uint64_t flag_bit = layout.flag_mask();
    auto amps = state.amplitudes();
    for (std::uint64_t j = 0; j < groups; ++j) {
        std::uint64_t i0 = insert_zeros(j, pinned) | marked;
        std::swap(amps[i0], amps[i0 | flag_bit]);
    }
    ledger.record();
}

void apply_phase_oracle(StateVector &state, int index_width, std::uint64_t marked, QueryLedger &ledger) {
    if (index_width < 1 || index_width > state.num_qubits()) {
        throw DomainError("index width " + std::to_string(index_width) + " out of range for " +
                          std::to_string(state.num_qubits()) + " qubits");
    }
    const std::uint64_t index_mask = (std::uint64_t{1} << index_width) - 1;
    if (marked > index_mask) {
        throw DomainError("marked index " + std::to_string(marked) + " out of range for a " +
                          std::to_string(index_width) + "-qubit index register");
    }
    auto amps = state.amplitudes();
    const std::uint64_t stride = index_mask + 1;
    for (std::uint64_t i = marked; i < state.size(); i += stride) {
        amps[i] = -amps[i];
    }
    ledger.record();
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DomainError("inner product of states with " + std::to_string(a.num_qubits()) + " and " +
                          std::to_string(b.num_qubits()) + " qubits");
    }
    Amplitude total{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

double marginal_prob(const StateVector &state, std::span<const int> qubits, std::uint64_t value) {
    check_qubits(state, qubits);
    if (qubits.size() < 64 && value >= (std::uint64_t{1} << qubits.size())) {
        throw DomainError("value " + std::to_string(value) + " does not fit in " + std::to_string(qubits.size()) +
                          " qubits");
    }
    std::uint64_t pattern = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        if ((value >> j) & 1) {
            pattern |= std::uint64_t{1} << qubits[j];
        }
    }
    std::vector<int> sorted(qubits.begin(), qubits.end());
    std::sort(sorted.begin(), sorted.end());
    const std::uint64_t groups = state.size() >> sorted.size();
    double total = 0;
    for (std::uint64_t j = 0; j < groups; ++j) {
        total += std::norm(state[insert_zeros(j, sorted) | pattern]);
    }
    return total;
}

}  // namespace groverlab

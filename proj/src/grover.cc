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

#include "groverlab/grover.h"

#include <cmath>
#include <numbers>
#include <string>

#include "groverlab/errors.h"
#include "groverlab/gates.h"
#include "groverlab/register_layout.h"

namespace groverlab {

namespace {

constexpr double kTieTolerance = 1e-12;

void check_iterations(int iterations) {
    if (iterations < 0) {
        throw DomainError("iteration count must be non-negative, got " + std::to_string(iterations));
    }
}

StateVector uniform_index_state(int index_width, int total_qubits) {
    auto state = StateVector::basis(total_qubits, 0);
    for (int k = 0; k < index_width; ++k) {
        apply_h(state, k);
    }
    return state;
}

}  // namespace

double grover_angle(std::uint64_t N) {
    if (N < 2 || (N & (N - 1)) != 0) {
        throw DomainError("N must be a power of two >= 2, got " + std::to_string(N));
    }
    return std::asin(1.0 / std::sqrt(static_cast<double>(N)));
}

double closed_form_success(std::uint64_t N, int iterations) {
    check_iterations(iterations);
    double s = std::sin((2.0 * iterations + 1.0) * grover_angle(N));
    return s * s;
}

double success_ceiling(std::uint64_t N, int iterations) {
    check_iterations(iterations);
    double angle = (2.0 * iterations + 1.0) * grover_angle(N);
    return angle >= std::numbers::pi / 2 ? 1.0 : closed_form_success(N, iterations);
}

int optimal_iterations(std::uint64_t N) {
    double theta = grover_angle(N);
    double peak = std::numbers::pi / (4.0 * theta) - 0.5;
    int lo = static_cast<int>(std::floor(peak));
    int hi = static_cast<int>(std::ceil(peak));
    lo = std::max(lo, 0);
    hi = std::max(hi, 0);
    if (closed_form_success(N, hi) > closed_form_success(N, lo) + kTieTolerance) {
        return hi;
    }
    return lo;
}

void apply_diffusion(StateVector &state, int index_width) {
    for (int k = 0; k < index_width; ++k) {
        apply_h(state, k);
    }
    const std::uint64_t stride = std::uint64_t{1} << index_width;
    auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < state.size(); i += stride) {
        amps[i] = -amps[i];
    }
    for (int k = 0; k < index_width; ++k) {
        apply_h(state, k);
    }
}

std::vector<SearchOutcome> grover_trajectory(int index_width, std::uint64_t marked, int max_iterations) {
    check_iterations(max_iterations);
    auto state = uniform_index_state(index_width, index_width);
    if (marked >= state.size()) {
        throw DomainError("marked index " + std::to_string(marked) + " out of range for " +
                          std::to_string(index_width) + " qubits");
    }
    QueryLedger ledger;
    std::vector<SearchOutcome> out;
    out.reserve(static_cast<std::size_t>(max_iterations) + 1);
    for (int t = 0;; ++t) {
        out.push_back({index_width, marked, t, std::norm(state[marked]), ledger.queries()});
        if (t == max_iterations) {
            break;
        }
        apply_phase_oracle(state, index_width, marked, ledger);
        apply_diffusion(state, index_width);
    }
    return out;
}

SearchOutcome run_grover(int index_width, std::uint64_t marked, int iterations) {
    return grover_trajectory(index_width, marked, iterations).back();
}

SearchOutcome run_grover_flip_oracle(int index_width, std::uint64_t marked, int iterations) {
    check_iterations(iterations);
    RegisterLayout layout(index_width, 0);
    if (marked >= layout.index_dimension()) {
        throw DomainError("marked index " + std::to_string(marked) + " out of range for " +
                          std::to_string(index_width) + " qubits");
    }
    auto state = uniform_index_state(index_width, layout.total_qubits());
    QueryLedger ledger;
    for (int t = 0; t < iterations; ++t) {
        apply_oracle_flip(state, layout, marked, ledger);
        apply_z(state, layout.flag());
        apply_oracle_flip(state, layout, marked, ledger);
        apply_diffusion(state, index_width);
    }
    auto index = layout.index_qubits();
    return {index_width, marked, iterations, marginal_prob(state, index, marked), ledger.queries()};
}

}  // namespace groverlab

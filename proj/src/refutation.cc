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

#include "groverlab/refutation.h"

#include <Eigen/SVD>
#include <algorithm>
#include <random>
#include <string>

#include "groverlab/errors.h"
#include "groverlab/gates.h"

namespace groverlab {

namespace {

void apply_random_round(StateVector &state, const RegisterLayout &layout, std::uint64_t seed) {
    auto ancillas = layout.ancilla_qubits();
    if (ancillas.empty()) {
        return;
    }
    const int control[] = {layout.flag()};
    std::mt19937_64 rng(seed);
    const auto depth = ancillas.size();
    if (ancillas.size() == 1) {
        const int target[] = {ancillas[0]};
        for (std::size_t layer = 0; layer < depth; ++layer) {
            apply_controlled_block(state, control, target, random_unitary(2, rng));
        }
        return;
    }
    std::uniform_int_distribution<std::size_t> pick(0, ancillas.size() - 1);
    for (std::size_t layer = 0; layer < depth; ++layer) {
        std::size_t a = pick(rng);
        std::size_t b = pick(rng);
        while (b == a) {
            b = pick(rng);
        }
        const int targets[] = {ancillas[a], ancillas[b]};
        apply_controlled_block(state, control, targets, random_unitary(4, rng));
    }
}

void apply_custom_round(StateVector &state, const RegisterLayout &layout, const RoundSpec &spec) {
    auto ancillas = layout.ancilla_qubits();
    for (int q : spec.targets) {
        if (std::find(ancillas.begin(), ancillas.end(), q) == ancillas.end()) {
            throw ValidationError("round targets qubit " + std::to_string(q) +
                                  ", which is not an ancilla; later rounds may only act on ancillas");
        }
    }
    const int control[] = {layout.flag()};
    apply_controlled_block(state, control, spec.targets, spec.block);
}

}  // namespace

MarkedState prepare_marked_superposition(int index_width, std::uint64_t marked, int ancilla_registers) {
    RegisterLayout layout(index_width, ancilla_registers);
    if (marked >= layout.index_dimension()) {
        throw DomainError("marked index " + std::to_string(marked) + " out of range for a " +
                          std::to_string(index_width) + "-qubit index register");
    }
    int cap = default_qubit_cap();
    if (layout.total_qubits() > cap) {
        throw CapacityError("layout needs " + std::to_string(layout.total_qubits()) + " qubits, cap is " +
                            std::to_string(cap));
    }
    MarkedState out{StateVector::basis(layout.total_qubits(), 0, cap), layout, {}};
    for (int q : layout.index_qubits()) {
        apply_h(out.state, q);
    }
    apply_oracle_flip(out.state, layout, marked, out.ledger);
    return out;
}

void apply_copy_round(StateVector &state, const RegisterLayout &layout) {
    layout.validate_for(state);
    for (int j = 0; j < layout.ancilla_registers(); ++j) {
        auto reg = layout.ancilla_register(j);
        for (int k = 0; k < layout.index_width(); ++k) {
            apply_ccx(state, layout.flag(), k, reg[k]);
        }
    }
}

void apply_round(StateVector &state, const RegisterLayout &layout, const RoundSpec &spec) {
    layout.validate_for(state);
    switch (spec.kind) {
        case RoundSpec::Kind::kCopy:
            apply_copy_round(state, layout);
            break;
        case RoundSpec::Kind::kIdentity:
            break;
        case RoundSpec::Kind::kHadamard: {
            const int control[] = {layout.flag()};
            const Unitary h = hadamard_block(1);
            for (int q : layout.ancilla_qubits()) {
                const int target[] = {q};
                apply_controlled_block(state, control, target, h);
            }
            break;
        }
        case RoundSpec::Kind::kRandom:
            apply_random_round(state, layout, spec.seed);
            break;
        case RoundSpec::Kind::kCustom:
            apply_custom_round(state, layout, spec);
            break;
    }
}

MarkedState run_refutation_pipeline(int index_width,
                                    std::uint64_t marked,
                                    int ancilla_registers,
                                    std::span<const RoundSpec> later_rounds) {
    auto out = prepare_marked_superposition(index_width, marked, ancilla_registers);
    apply_copy_round(out.state, out.layout);
    for (const auto &spec : later_rounds) {
        apply_round(out.state, out.layout, spec);
    }
    return out;
}

RevealResult ancilla_reveal_probability(const StateVector &state, const RegisterLayout &layout, std::uint64_t marked) {
    layout.validate_for(state);
    if (layout.ancilla_registers() == 0) {
        throw DomainError("layout has no ancilla register to read");
    }
    if (marked >= layout.index_dimension()) {
        throw DomainError("marked index " + std::to_string(marked) + " out of range");
    }
    auto reg = layout.ancilla_register(0);
    return {marginal_prob(state, reg, marked), marked == 0};
}

IdentificationAccumulator::IdentificationAccumulator(RegisterLayout layout, std::vector<int> measured)
    : layout_(layout), measured_(std::move(measured)), seen_(layout.index_dimension(), false) {
    for (std::size_t a = 0; a < measured_.size(); ++a) {
        if (measured_[a] < 0 || measured_[a] >= layout_.total_qubits()) {
            throw DomainError("measured qubit " + std::to_string(measured_[a]) + " out of range");
        }
        for (std::size_t b = 0; b < a; ++b) {
            if (measured_[a] == measured_[b]) {
                throw DomainError("measured qubit " + std::to_string(measured_[a]) + " listed twice");
            }
        }
    }
    best_likelihood_.assign(std::size_t{1} << measured_.size(), 0.0);
}

void IdentificationAccumulator::add(std::uint64_t marked, const StateVector &state) {
    layout_.validate_for(state);
    if (marked >= layout_.index_dimension()) {
        throw DomainError("marked index " + std::to_string(marked) + " out of range");
    }
    if (seen_[marked]) {
        throw DomainError("marked index " + std::to_string(marked) + " added twice");
    }
    seen_[marked] = true;
    ++added_;

    bool identity_order = measured_.size() == static_cast<std::size_t>(state.num_qubits());
    for (std::size_t j = 0; identity_order && j < measured_.size(); ++j) {
        identity_order = measured_[j] == static_cast<int>(j);
    }
    if (identity_order) {
        for (std::size_t i = 0; i < state.size(); ++i) {
            best_likelihood_[i] = std::max(best_likelihood_[i], std::norm(state[i]));
        }
        return;
    }
    std::vector<double> likelihood(best_likelihood_.size(), 0.0);
    for (std::size_t i = 0; i < state.size(); ++i) {
        double p = std::norm(state[i]);
        if (p == 0) {
            continue;
        }
        std::size_t outcome = 0;
        for (std::size_t j = 0; j < measured_.size(); ++j) {
            outcome |= ((i >> measured_[j]) & 1) << j;
        }
        likelihood[outcome] += p;
    }
    for (std::size_t o = 0; o < likelihood.size(); ++o) {
        best_likelihood_[o] = std::max(best_likelihood_[o], likelihood[o]);
    }
}

double IdentificationAccumulator::probability() const {
    if (added_ != layout_.index_dimension()) {
        throw DomainError("identification needs a state for every marked index; have " + std::to_string(added_) +
                          " of " + std::to_string(layout_.index_dimension()));
    }
    double total = 0;
    for (double p : best_likelihood_) {
        total += p;
    }
    return total / static_cast<double>(layout_.index_dimension());
}

double identification_probability(std::span<const StateVector> states_by_marked,
                                  const RegisterLayout &layout,
                                  std::span<const int> measured) {
    IdentificationAccumulator acc(layout, {measured.begin(), measured.end()});
    for (std::size_t d = 0; d < states_by_marked.size(); ++d) {
        acc.add(d, states_by_marked[d]);
    }
    return acc.probability();
}

double identification_probability(std::span<const StateVector> states_by_marked, const RegisterLayout &layout) {
    std::vector<int> all(layout.total_qubits());
    for (int q = 0; q < layout.total_qubits(); ++q) {
        all[q] = q;
    }
    return identification_probability(states_by_marked, layout, all);
}

double identification_probability(int index_width, int ancilla_registers, std::span<const RoundSpec> later_rounds) {
    RegisterLayout layout(index_width, ancilla_registers);
    std::vector<int> all(layout.total_qubits());
    for (int q = 0; q < layout.total_qubits(); ++q) {
        all[q] = q;
    }
    IdentificationAccumulator acc(layout, all);
    for (std::uint64_t d = 0; d < layout.index_dimension(); ++d) {
        acc.add(d, run_refutation_pipeline(index_width, d, ancilla_registers, later_rounds).state);
    }
    return acc.probability();
}

int schmidt_rank(const StateVector &state, std::span<const int> subsystem, double tolerance) {
    std::vector<int> rest;
    for (int q = 0; q < state.num_qubits(); ++q) {
        if (std::find(subsystem.begin(), subsystem.end(), q) == subsystem.end()) {
            rest.push_back(q);
        }
    }
    if (subsystem.size() + rest.size() != static_cast<std::size_t>(state.num_qubits())) {
        throw DomainError("subsystem has repeated or out-of-range qubits");
    }
    auto extract = [](std::size_t i, std::span<const int> qubits) {
        std::size_t v = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            v |= ((i >> qubits[j]) & 1) << j;
        }
        return v;
    };
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(Eigen::Index{1} << subsystem.size(), Eigen::Index{1} << rest.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
        m(static_cast<Eigen::Index>(extract(i, subsystem)), static_cast<Eigen::Index>(extract(i, rest))) = state[i];
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const auto &sigma = svd.singularValues();
    int rank = 0;
    for (Eigen::Index k = 0; k < sigma.size(); ++k) {
        rank += sigma[k] > tolerance ? 1 : 0;
    }
    return rank;
}

double flag_zero_drift(const StateVector &before, const StateVector &after, const RegisterLayout &layout) {
    layout.validate_for(before);
    layout.validate_for(after);
    const std::uint64_t flag = layout.flag_mask();
    double worst = 0;
    for (std::size_t i = 0; i < before.size(); ++i) {
        if ((i & flag) == 0) {
            worst = std::max(worst, std::abs(before[i] - after[i]));
        }
    }
    return worst;
}

}  // namespace groverlab

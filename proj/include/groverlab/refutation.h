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

#ifndef GROVERLAB_REFUTATION_H
#define GROVERLAB_REFUTATION_H

#include <cstdint>
#include <span>
#include <vector>

#include "groverlab/random_unitary.h"
#include "groverlab/register_layout.h"
#include "groverlab/state_vector.h"

namespace groverlab {

// Reconstruction of the ancilla-copy search scheme. The state starts as
//
//     N^-1/2 ( sum_{i != d} |i, 0> + |d, 1> ) (x) |0...0>^M
//
// the first round fans the index out into every ancilla register under flag
// control, and every later round is a unitary on the ancillas controlled by the
// flag. The flag = 0 branch is therefore never touched after preparation.

struct RoundSpec {
    enum class Kind {
        kCopy,      // CCX(flag, index_k, ancilla_j[k]) for every j, k
        kIdentity,  // flag-controlled identity
        kHadamard,  // flag-controlled H on every ancilla qubit
        kRandom,    // flag-controlled seeded product of 2-qubit Haar blocks
        kCustom,    // flag-controlled `block` on `targets`
    };

    Kind kind = Kind::kIdentity;
    std::uint64_t seed = 0;
    std::vector<int> targets;
    Unitary block;

    static RoundSpec copy() {
        return {Kind::kCopy, 0, {}, {}};
    }
    static RoundSpec identity() {
        return {Kind::kIdentity, 0, {}, {}};
    }
    static RoundSpec hadamard() {
        return {Kind::kHadamard, 0, {}, {}};
    }
    static RoundSpec random(std::uint64_t seed) {
        return {Kind::kRandom, seed, {}, {}};
    }
    static RoundSpec custom(std::vector<int> targets, Unitary block) {
        return {Kind::kCustom, 0, std::move(targets), std::move(block)};
    }
};

struct MarkedState {
    StateVector state;
    RegisterLayout layout;
    QueryLedger ledger;
};

/// Uniform Hadamards on the index register followed by one oracle flip, so the
/// ledger reads 1. CapacityError if n*(M+1)+1 exceeds the qubit cap.
MarkedState prepare_marked_superposition(int index_width, std::uint64_t marked, int ancilla_registers);

void apply_copy_round(StateVector &state, const RegisterLayout &layout);

/// ValidationError if a custom round targets anything but ancilla qubits.
void apply_round(StateVector &state, const RegisterLayout &layout, const RoundSpec &spec);

/// prepare_marked_superposition, the copy round, then `later_rounds` in order.
MarkedState run_refutation_pipeline(int index_width,
                                    std::uint64_t marked,
                                    int ancilla_registers,
                                    std::span<const RoundSpec> later_rounds);

struct RevealResult {
    double probability;
    /// True when marked == 0: the copied pattern equals the initial pattern and
    /// the reading carries no information.
    bool degenerate;
};

/// Probability that ancilla register 0 reads `marked`. DomainError if the
/// layout has no ancilla registers.
RevealResult ancilla_reveal_probability(const StateVector &state, const RegisterLayout &layout, std::uint64_t marked);

/// Success of the maximum-likelihood guess of the marked index from one
/// computational-basis measurement of `measured`, averaged over a uniformly
/// random marked index. Feed it the pipeline state for every marked index.
class IdentificationAccumulator {
   public:
    IdentificationAccumulator(RegisterLayout layout, std::vector<int> measured);

    /// Each marked index must be added exactly once (DomainError otherwise).
    void add(std::uint64_t marked, const StateVector &state);

    /// DomainError until every marked index has been added.
    double probability() const;

   private:
    RegisterLayout layout_;
    std::vector<int> measured_;
    std::vector<double> best_likelihood_;
    std::vector<bool> seen_;
    std::uint64_t added_ = 0;
};

/// identification over all qubits (index, flag and ancillas).
double identification_probability(std::span<const StateVector> states_by_marked, const RegisterLayout &layout);

double identification_probability(std::span<const StateVector> states_by_marked,
                                  const RegisterLayout &layout,
                                  std::span<const int> measured);

/// Runs the pipeline for every marked index and measures every qubit.
double identification_probability(int index_width, int ancilla_registers, std::span<const RoundSpec> later_rounds);

/// Number of singular values above `tolerance` of the amplitude matrix split
/// between `subsystem` and the remaining qubits.
int schmidt_rank(const StateVector &state, std::span<const int> subsystem, double tolerance = 1e-10);

/// max |before_i - after_i| over basis states with flag = 0.
double flag_zero_drift(const StateVector &before, const StateVector &after, const RegisterLayout &layout);

}  // namespace groverlab

#endif

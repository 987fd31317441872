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

#ifndef GROVERLAB_GATES_H
#define GROVERLAB_GATES_H

#include <cstdint>
#include <span>

#include "groverlab/random_unitary.h"
#include "groverlab/register_layout.h"
#include "groverlab/state_vector.h"

namespace groverlab {

// In-place gate kernels. Each one sweeps the amplitude array pairwise (or
// blockwise for apply_controlled_block); no matrix is built for elementary
// gates. Bad qubit indices raise DomainError.

void apply_h(StateVector &state, int qubit);
void apply_x(StateVector &state, int qubit);
void apply_z(StateVector &state, int qubit);
void apply_cnot(StateVector &state, int control, int target);
void apply_ccx(StateVector &state, int control1, int control2, int target);

/// X on `target` where every qubit in `controls` is 1.
void apply_mcx(StateVector &state, std::span<const int> controls, int target);

/// Applies `block` to `targets` on the subspace where all `controls` are 1 and
/// leaves every other amplitude untouched (not even rewritten). `targets[0]` is
/// the least significant bit of the block's row index. Groups whose
/// amplitudes are all exactly zero are skipped.
///
/// Throws ValidationError if the block is not unitary within 1e-10 and
/// DomainError on size mismatch or overlapping / out-of-range qubits.
void apply_controlled_block(StateVector &state,
                            std::span<const int> controls,
                            std::span<const int> targets,
                            const Unitary &block);

/// Bit-flip oracle: flips the layout's flag on exactly those basis states
/// whose index register reads `marked`, then records one query.
void apply_oracle_flip(StateVector &state, const RegisterLayout &layout, std::uint64_t marked, QueryLedger &ledger);

/// Phase oracle over the low `index_width` qubits: negates every amplitude
/// whose index register reads `marked`, then records one query.
void apply_phase_oracle(StateVector &state, int index_width, std::uint64_t marked, QueryLedger &ledger);

/// sum_i conj(a_i) * b_i. DomainError if qubit counts differ.
Amplitude inner_product(const StateVector &a, const StateVector &b);

/// Probability that measuring `qubits` yields `value` (bit j of value is the
/// outcome of qubits[j]).
double marginal_prob(const StateVector &state, std::span<const int> qubits, std::uint64_t value);

}  // namespace groverlab

#endif

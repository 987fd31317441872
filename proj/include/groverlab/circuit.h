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

#ifndef GROVERLAB_CIRCUIT_H
#define GROVERLAB_CIRCUIT_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "groverlab/state_vector.h"

namespace groverlab {

enum class GateKind { kH, kX, kCnot, kCcx, kOracle };

struct GateOp {
    GateKind kind;
    /// Controls first, target last. Empty for kOracle.
    std::vector<int> qubits;
    /// Marked index, kOracle only.
    std::uint64_t marked = 0;

    bool operator==(const GateOp &other) const = default;
};

/// A straight-line circuit in the text format
///
///     qubits <q>
///     h <k> | x <k> | cx <c> <t> | ccx <c1> <c2> <t> | oracle <d>
///
/// one statement per line, `#` starting a comment. `oracle <d>` is the
/// bit-flip oracle with qubits [0, q-1) as the index register and qubit q-1 as
/// the flag.
struct Circuit {
    int num_qubits = 0;
    std::vector<GateOp> ops;

    bool operator==(const Circuit &other) const = default;
};

/// ParseError (with line number) on a missing header, unknown mnemonic, wrong
/// arity, malformed integer, repeated qubit or out-of-range operand.
Circuit parse_circuit(std::string_view text);

/// Canonical text for `circuit`; parse_circuit(print_circuit(c)) == c.
std::string print_circuit(const Circuit &circuit);

struct CircuitRun {
    StateVector state;
    QueryLedger ledger;
};

/// Applies the circuit to |0...0>. CapacityError above the qubit cap.
CircuitRun run_circuit(const Circuit &circuit);

}  // namespace groverlab

#endif

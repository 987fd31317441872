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

#include "groverlab/circuit.h"

#include <charconv>
#include <sstream>

#include "groverlab/errors.h"
#include "groverlab/gates.h"
#include "groverlab/register_layout.h"

namespace groverlab {

namespace {

constexpr int kMaxDeclaredQubits = 62;

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            words.push_back(line.substr(start, i - start));
        }
    }
    return words;
}

std::uint64_t parse_uint(std::string_view word, std::size_t line_number) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw ParseError(line_number, "expected a non-negative integer, got '" + std::string(word) + "'");
    }
    return value;
}

struct Mnemonic {
    std::string_view name;
    GateKind kind;
    std::size_t arity;
};

constexpr Mnemonic kMnemonics[] = {
    {"h", GateKind::kH, 1},     {"x", GateKind::kX, 1},           {"cx", GateKind::kCnot, 2},
    {"ccx", GateKind::kCcx, 3}, {"oracle", GateKind::kOracle, 1},
};

std::string_view mnemonic_of(GateKind kind) {
    for (const auto &m : kMnemonics) {
        if (m.kind == kind) {
            return m.name;
        }
    }
    return "?";
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    bool have_header = false;
    std::size_t line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto words = split_words(line);
        if (words.empty()) {
            continue;
        }

        if (words[0] == "qubits") {
            if (have_header) {
                throw ParseError(line_number, "duplicate 'qubits' header");
            }
            if (words.size() != 2) {
                throw ParseError(line_number, "'qubits' takes exactly one operand");
            }
            auto q = parse_uint(words[1], line_number);
            if (q < 1 || q > kMaxDeclaredQubits) {
                throw ParseError(line_number, "qubit count must be in [1, 62]");
            }
            circuit.num_qubits = static_cast<int>(q);
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw ParseError(line_number, "missing 'qubits <q>' header before first operation");
        }

        const Mnemonic *mnemonic = nullptr;
        for (const auto &m : kMnemonics) {
            if (m.name == words[0]) {
                mnemonic = &m;
            }
        }
        if (mnemonic == nullptr) {
            throw ParseError(line_number, "unknown operation '" + std::string(words[0]) + "'");
        }
        if (words.size() - 1 != mnemonic->arity) {
            throw ParseError(line_number, "'" + std::string(mnemonic->name) + "' takes " +
                                              std::to_string(mnemonic->arity) + " operand(s), got " +
                                              std::to_string(words.size() - 1));
        }

        GateOp op{mnemonic->kind, {}, 0};
        if (op.kind == GateKind::kOracle) {
            if (circuit.num_qubits < 2) {
                throw ParseError(line_number, "'oracle' needs at least 2 qubits (index register plus flag)");
            }
            op.marked = parse_uint(words[1], line_number);
            if (op.marked >= (std::uint64_t{1} << (circuit.num_qubits - 1))) {
                throw ParseError(line_number, "marked index " + std::to_string(op.marked) +
                                                  " does not fit the index register");
            }
        } else {
            for (std::size_t k = 1; k < words.size(); ++k) {
                auto q = parse_uint(words[k], line_number);
                if (q >= static_cast<std::uint64_t>(circuit.num_qubits)) {
                    throw ParseError(line_number, "qubit " + std::to_string(q) + " out of range");
                }
                for (int prev : op.qubits) {
                    if (static_cast<std::uint64_t>(prev) == q) {
                        throw ParseError(line_number, "qubit " + std::to_string(q) + " repeated");
                    }
                }
                op.qubits.push_back(static_cast<int>(q));
            }
        }
        circuit.ops.push_back(std::move(op));
    }
    if (!have_header) {
        throw ParseError(line_number == 0 ? 1 : line_number, "missing 'qubits <q>' header");
    }
    return circuit;
}

std::string print_circuit(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits << "\n";
    for (const auto &op : circuit.ops) {
        out << mnemonic_of(op.kind);
        if (op.kind == GateKind::kOracle) {
            out << " " << op.marked;
        }
        for (int q : op.qubits) {
            out << " " << q;
        }
        out << "\n";
    }
    return out.str();
}

CircuitRun run_circuit(const Circuit &circuit) {
    CircuitRun run{StateVector::basis(circuit.num_qubits, 0), {}};
    for (const auto &op : circuit.ops) {
        switch (op.kind) {
            case GateKind::kH:
                apply_h(run.state, op.qubits.at(0));
                break;
            case GateKind::kX:
                apply_x(run.state, op.qubits.at(0));
                break;
            case GateKind::kCnot:
                apply_cnot(run.state, op.qubits.at(0), op.qubits.at(1));
                break;
            case GateKind::kCcx:
                apply_ccx(run.state, op.qubits.at(0), op.qubits.at(1), op.qubits.at(2));
                break;
            case GateKind::kOracle:
                apply_oracle_flip(run.state, RegisterLayout(circuit.num_qubits - 1, 0), op.marked, run.ledger);
                break;
        }
    }
    return run;
}

}  // namespace groverlab

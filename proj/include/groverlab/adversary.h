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

#ifndef GROVERLAB_ADVERSARY_H
#define GROVERLAB_ADVERSARY_H

#include <cstdint>
#include <vector>

namespace groverlab {

/// Slack allowed above the closed-form curve before a trial counts as a
/// violation.
inline constexpr double kCeilingTolerance = 1e-9;

struct AdversaryConfig {
    int index_width = 1;
    int extra_qubits = 0;
    int queries = 0;
    int trials = 1;
    std::uint64_t seed = 0;
    /// Qubits per random block (clamped to the register size).
    int block_qubits = 2;
    /// Blocks per interleaved unitary; 0 means 3 * (n + extra).
    int depth = 0;
};

struct TrialResult {
    std::uint64_t marked;
    double success;
    std::int64_t queries;
};

struct AdversaryReport {
    AdversaryConfig config;
    std::vector<TrialResult> trials;
    double max_success;
    double mean_success;
    /// success_ceiling(2^n, queries).
    double ceiling;
    bool ceiling_ok;
    bool ledger_ok;
};

/// Every trial draws a marked index and random unitaries U_0..U_t from its own
/// substream, evolves U_t Q ... U_1 Q U_0 |0...0> over the index register plus
/// `extra_qubits`, and scores the probability that the index register reads the
/// marked item, summed over every auxiliary pattern.
///
/// DomainError on trials < 1, queries < 0 or block sizes < 1; CapacityError
/// when the register exceeds the qubit cap.
AdversaryReport adversarial_search(const AdversaryConfig &config);

struct AdvantageComparison {
    int index_width;
    int queries;
    int trials;
    std::uint64_t seed;
    /// Success of plain Grover with the same query budget.
    double grover_success;
    AdversaryReport without_ancillas;
    AdversaryReport with_ancillas;
    /// with_ancillas.max_success - without_ancillas.max_success.
    double difference;
    bool ceiling_ok;
};

inline constexpr int kComparisonExtraQubits = 2;

/// Runs adversarial_search with 0 and kComparisonExtraQubits extra qubits under
/// the same seed.
AdvantageComparison ancilla_advantage_report(int index_width, int queries, int trials, std::uint64_t seed);

}  // namespace groverlab

#endif

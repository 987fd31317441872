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

#include "groverlab/adversary.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "groverlab/errors.h"
#include "groverlab/gates.h"
#include "groverlab/grover.h"
#include "groverlab/random_unitary.h"

namespace groverlab {

namespace {

void apply_random_layer(StateVector &state, int block_qubits, int depth, std::mt19937_64 &rng) {
    const int total = state.num_qubits();
    const int width = std::min(block_qubits, total);
    std::vector<int> qubits(total);
    std::iota(qubits.begin(), qubits.end(), 0);
    for (int b = 0; b < depth; ++b) {
        // Partial Fisher-Yates: the first `width` entries become the targets.
        for (int k = 0; k < width; ++k) {
            std::uniform_int_distribution<int> pick(k, total - 1);
            std::swap(qubits[k], qubits[pick(rng)]);
        }
        std::span<const int> targets(qubits.data(), static_cast<std::size_t>(width));
        apply_controlled_block(state, {}, targets, random_unitary(std::size_t{1} << width, rng));
    }
}

TrialResult run_trial(const AdversaryConfig &config, int depth, std::uint64_t trial) {
    std::mt19937_64 rng(derive_seed(config.seed, trial));
    const std::uint64_t dim = std::uint64_t{1} << config.index_width;
    std::uniform_int_distribution<std::uint64_t> pick_marked(0, dim - 1);
    const std::uint64_t marked = pick_marked(rng);

    auto state = StateVector::basis(config.index_width + config.extra_qubits, 0);
    QueryLedger ledger;
    apply_random_layer(state, config.block_qubits, depth, rng);
    for (int q = 0; q < config.queries; ++q) {
        apply_phase_oracle(state, config.index_width, marked, ledger);
        apply_random_layer(state, config.block_qubits, depth, rng);
    }
    std::vector<int> index(config.index_width);
    std::iota(index.begin(), index.end(), 0);
    return {marked, marginal_prob(state, index, marked), ledger.queries()};
}

}  // namespace

AdversaryReport adversarial_search(const AdversaryConfig &config) {
    if (config.trials < 1) {
        throw DomainError("trials must be at least 1");
    }
    if (config.queries < 0 || config.extra_qubits < 0 || config.index_width < 1) {
        throw DomainError("index width must be >= 1 and queries, extra qubits >= 0");
    }
    if (config.block_qubits < 1 || config.depth < 0) {
        throw DomainError("block size must be >= 1 and depth >= 0");
    }
    if (config.block_qubits > kDefaultBlockQubitCap) {
        throw CapacityError("block size exceeds " + std::to_string(kDefaultBlockQubitCap) + " qubits");
    }
    if (config.index_width + config.extra_qubits > default_qubit_cap()) {
        throw CapacityError("register of " + std::to_string(config.index_width + config.extra_qubits) +
                            " qubits exceeds the cap");
    }
    const int depth = config.depth > 0 ? config.depth : 3 * (config.index_width + config.extra_qubits);

    AdversaryReport report{config, {}, 0.0, 0.0, 0.0, true, true};
    report.ceiling = success_ceiling(std::uint64_t{1} << config.index_width, config.queries);
    report.trials.reserve(static_cast<std::size_t>(config.trials));
    double total = 0;
    for (int t = 0; t < config.trials; ++t) {
        auto trial = run_trial(config, depth, static_cast<std::uint64_t>(t));
        report.max_success = std::max(report.max_success, trial.success);
        total += trial.success;
        report.ceiling_ok = report.ceiling_ok && trial.success <= report.ceiling + kCeilingTolerance;
        report.ledger_ok = report.ledger_ok && trial.queries == config.queries;
        report.trials.push_back(trial);
    }
    report.mean_success = total / config.trials;
    return report;
}

AdvantageComparison ancilla_advantage_report(int index_width, int queries, int trials, std::uint64_t seed) {
    AdversaryConfig base;
    base.index_width = index_width;
    base.queries = queries;
    base.trials = trials;
    base.seed = seed;
    AdversaryConfig extended = base;
    extended.extra_qubits = kComparisonExtraQubits;

    AdvantageComparison out{index_width, queries, trials, seed, 0.0, adversarial_search(base),
                            adversarial_search(extended), 0.0, false};
    out.grover_success = run_grover(index_width, 0, queries).success_probability;
    out.difference = out.with_ancillas.max_success - out.without_ancillas.max_success;
    out.ceiling_ok = out.without_ancillas.ceiling_ok && out.with_ancillas.ceiling_ok;
    return out;
}

}  // namespace groverlab

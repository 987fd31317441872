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

#ifndef GROVERLAB_CLI_H
#define GROVERLAB_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "groverlab/circuit.h"
#include "groverlab/refutation.h"
#include "groverlab/report.h"

namespace groverlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariantViolated = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

/// Later-round schedule from a comma list of `identity`, `hadamard` and
/// `random:<k>` (k >= 1 random rounds). The i-th random round overall gets
/// seed derive_seed(seed, i). An empty string is an empty schedule.
/// DomainError on anything else.
std::vector<RoundSpec> parse_round_schedule(std::string_view text, std::uint64_t seed);

// Report builders behind each subcommand. `command` is echoed verbatim.

/// `iterations` empty means optimal_iterations(2^n).
ExperimentReport grover_report(int index_width, std::uint64_t marked, std::optional<int> iterations,
                               std::uint64_t seed, std::string command);

ExperimentReport refute_report(int index_width, std::uint64_t marked, int ancilla_registers, std::string_view rounds,
                               std::uint64_t seed, std::string command);

ExperimentReport bound_report(int index_width, int ancilla_width, double p, std::uint64_t seed, std::string command);

struct AdversaryConfig;
ExperimentReport adversary_report(const AdversaryConfig &config, std::string command);
ExperimentReport adversary_compare_report(int index_width, int queries, int trials, std::uint64_t seed,
                                          std::string command);

ExperimentReport circuit_report(const Circuit &circuit, std::string_view source, std::uint64_t seed,
                                std::string command);

/// Entry point of the `groverlab` tool. `args` excludes the program name.
/// Returns 0 on success, 1 if a checked invariant failed, 2 on bad usage or
/// input, 3 on capacity errors.
int run_command(std::span<const std::string> args, std::ostream &out, std::ostream &err);

}  // namespace groverlab

#endif

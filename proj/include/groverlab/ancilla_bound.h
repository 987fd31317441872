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

#ifndef GROVERLAB_ANCILLA_BOUND_H
#define GROVERLAB_ANCILLA_BOUND_H

#include <cstdint>
#include <span>
#include <vector>

#include "groverlab/state_vector.h"

namespace groverlab {

// Probability accounting for a search register of n index qubits followed by m
// auxiliary qubits. Basis index = target + (pattern << n).

inline constexpr double kDefaultUniformityEps = 0.05;

struct AncillaAnalysis {
    int index_width;
    int ancilla_width;
    std::uint64_t target;
    /// Distinct valid patterns, ascending.
    std::vector<std::uint64_t> valid_patterns;
    /// |<psi | target, pattern>|^2 for each entry of valid_patterns.
    std::vector<double> overlaps;
    /// Sum of `overlaps`.
    double pr_success;
    /// Mean overlap^2 over the valid set, the common per-pattern term when the
    /// overlaps are uniform.
    double term;
    /// 2^m * term.
    double bound_rhs;
    /// max / min overlap^2 <= 1 + eps, with any zero overlap failing.
    bool uniform;
    /// Effective exponent: max overlap^2 = 2^-p (+inf when every overlap is 0).
    double p;
};

/// sum over `valid_patterns` of |<psi | target, pattern>|^2. Duplicate
/// patterns count once. DomainError when target >= 2^n, a pattern >= 2^m or
/// n + m differs from the state's qubit count.
double valid_pattern_success(const StateVector &psi,
                             int index_width,
                             int ancilla_width,
                             std::uint64_t target,
                             std::span<const std::uint64_t> valid_patterns);

AncillaAnalysis analyze_uniform_bound(const StateVector &psi,
                                      int index_width,
                                      int ancilla_width,
                                      std::uint64_t target,
                                      std::span<const std::uint64_t> valid_patterns,
                                      double uniformity_eps = kDefaultUniformityEps);

/// arcsin(sqrt(2^-p)) * sqrt(2^(n+m)), before rounding. DomainError unless
/// 0 <= p <= n + m.
double query_count_estimate_real(int index_width, int ancilla_width, double p);

/// Ceiling of query_count_estimate_real.
std::uint64_t query_count_estimate(int index_width, int ancilla_width, double p);

/// H on every qubit of `ancilla_qubits`.
void hadamard_average(StateVector &psi, std::span<const int> ancilla_qubits);

}  // namespace groverlab

#endif

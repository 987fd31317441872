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

#include "groverlab/ancilla_bound.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "groverlab/errors.h"
#include "groverlab/gates.h"

namespace groverlab {

namespace {

std::vector<std::uint64_t> checked_patterns(const StateVector &psi,
                                            int index_width,
                                            int ancilla_width,
                                            std::uint64_t target,
                                            std::span<const std::uint64_t> valid_patterns) {
    if (index_width < 1 || ancilla_width < 0 || index_width + ancilla_width != psi.num_qubits()) {
        throw DomainError("register split " + std::to_string(index_width) + "+" + std::to_string(ancilla_width) +
                          " does not match a " + std::to_string(psi.num_qubits()) + "-qubit state");
    }
    if (target >= (std::uint64_t{1} << index_width)) {
        throw DomainError("target " + std::to_string(target) + " out of range");
    }
    std::vector<std::uint64_t> patterns(valid_patterns.begin(), valid_patterns.end());
    for (auto w : patterns) {
        if (w >= (std::uint64_t{1} << ancilla_width)) {
            throw DomainError("ancilla pattern " + std::to_string(w) + " out of range for " +
                              std::to_string(ancilla_width) + " qubits");
        }
    }
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    return patterns;
}

}  // namespace

double valid_pattern_success(const StateVector &psi,
                             int index_width,
                             int ancilla_width,
                             std::uint64_t target,
                             std::span<const std::uint64_t> valid_patterns) {
    double total = 0;
    for (auto w : checked_patterns(psi, index_width, ancilla_width, target, valid_patterns)) {
        total += std::norm(psi[target | (w << index_width)]);
    }
    return total;
}

AncillaAnalysis analyze_uniform_bound(const StateVector &psi,
                                      int index_width,
                                      int ancilla_width,
                                      std::uint64_t target,
                                      std::span<const std::uint64_t> valid_patterns,
                                      double uniformity_eps) {
    AncillaAnalysis out{};
    out.index_width = index_width;
    out.ancilla_width = ancilla_width;
    out.target = target;
    out.valid_patterns = checked_patterns(psi, index_width, ancilla_width, target, valid_patterns);
    out.pr_success = 0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0;
    for (auto w : out.valid_patterns) {
        double overlap = std::norm(psi[target | (w << index_width)]);
        out.overlaps.push_back(overlap);
        out.pr_success += overlap;
        lo = std::min(lo, overlap);
        hi = std::max(hi, overlap);
    }
    auto count = static_cast<double>(out.valid_patterns.size());
    out.term = count > 0 ? out.pr_success / count : 0.0;
    out.bound_rhs = std::ldexp(out.term, ancilla_width);
    out.uniform = count > 0 && lo > 0 && hi <= (1 + uniformity_eps) * lo;
    out.p = hi > 0 ? -std::log2(hi) : std::numeric_limits<double>::infinity();
    return out;
}

double query_count_estimate_real(int index_width, int ancilla_width, double p) {
    if (index_width < 0 || ancilla_width < 0) {
        throw DomainError("register widths must be non-negative");
    }
    double total = index_width + ancilla_width;
    if (!(p >= 0 && p <= total)) {
        throw DomainError("exponent p must lie in [0, n+m]");
    }
    return std::asin(std::sqrt(std::exp2(-p))) * std::sqrt(std::exp2(total));
}

std::uint64_t query_count_estimate(int index_width, int ancilla_width, double p) {
    return static_cast<std::uint64_t>(std::ceil(query_count_estimate_real(index_width, ancilla_width, p)));
}

void hadamard_average(StateVector &psi, std::span<const int> ancilla_qubits) {
    for (int q : ancilla_qubits) {
        apply_h(psi, q);
    }
}

}  // namespace groverlab

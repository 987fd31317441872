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

#ifndef GROVERLAB_GROVER_H
#define GROVERLAB_GROVER_H

#include <cstdint>
#include <vector>

#include "groverlab/state_vector.h"

namespace groverlab {

struct SearchOutcome {
    int index_width;
    std::uint64_t marked;
    int iterations;
    double success_probability;
    std::int64_t queries;
};

/// arcsin(1/sqrt(N)). DomainError unless N is a power of two >= 2.
double grover_angle(std::uint64_t N);

/// sin^2((2t+1) * grover_angle(N)): probability of measuring the marked item
/// after t Grover iterations.
double closed_form_success(std::uint64_t N, int iterations);

/// Best success any t-query algorithm can reach: the closed form while
/// (2t+1) theta <= pi/2, then 1. Past its peak the closed form itself falls,
/// so it is not an upper bound there.
double success_ceiling(std::uint64_t N, int iterations);

/// The t maximizing closed_form_success(N, t), picked from the two integers
/// bracketing pi/(4 theta) - 1/2. Ties (within 1e-12) go to the smaller t.
int optimal_iterations(std::uint64_t N);

/// H^n (phase flip on |0..0> of the index register) H^n, applied to the low
/// `index_width` qubits of `state`.
void apply_diffusion(StateVector &state, int index_width);

/// Simulates H^n |0>, then `iterations` rounds of (phase oracle, diffusion) on
/// an n-qubit index register. One query per round.
SearchOutcome run_grover(int index_width, std::uint64_t marked, int iterations);

/// Outcomes after 0, 1, ..., max_iterations rounds of a single simulation.
std::vector<SearchOutcome> grover_trajectory(int index_width, std::uint64_t marked, int max_iterations);

/// Same search with the phase oracle realized as flip, Z on the flag, flip on
/// an index register plus one flag qubit. Spends two queries per round.
SearchOutcome run_grover_flip_oracle(int index_width, std::uint64_t marked, int iterations);

}  // namespace groverlab

#endif

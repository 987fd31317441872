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

#ifndef GROVERLAB_RANDOM_UNITARY_H
#define GROVERLAB_RANDOM_UNITARY_H

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <random>

namespace groverlab {

/// Dense square matrix acting on 2^k amplitudes. Row/column s indexes the
/// target qubits little-endian, exactly like StateVector.
using Unitary = Eigen::MatrixXcd;

/// Largest block (in qubits) random_unitary will produce.
inline constexpr int kDefaultBlockQubitCap = 6;

/// Tolerance used when deciding whether a dense block is unitary.
inline constexpr double kUnitarityTolerance = 1e-10;

/// max |(U^dagger U - I)_ij|. Returns +inf for non-square input.
double unitarity_defect(const Unitary &u);

bool is_unitary(const Unitary &u, double tolerance = kUnitarityTolerance);

/// Haar-distributed unitary of size `dim`, drawn by QR-factoring a seeded
/// complex Gaussian matrix and fixing the phases of R's diagonal. `dim` must
/// be 2^k with k <= block_qubit_cap (DomainError / CapacityError otherwise).
Unitary random_unitary(std::size_t dim, std::uint64_t seed, int block_qubit_cap = kDefaultBlockQubitCap);

/// Same, drawing from a caller-owned stream.
Unitary random_unitary(std::size_t dim, std::mt19937_64 &rng, int block_qubit_cap = kDefaultBlockQubitCap);

/// Derives an independent 64-bit seed for substream `stream` of `base`
/// (splitmix64 finalizer over both words).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// H tensored over `qubits` qubits, as a dense block.
Unitary hadamard_block(int qubits);

}  // namespace groverlab

#endif

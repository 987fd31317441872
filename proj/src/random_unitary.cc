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

#include "groverlab/random_unitary.h"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "groverlab/errors.h"

namespace groverlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

void check_block_dim(std::size_t dim, int block_qubit_cap) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw DomainError("unitary dimension " + std::to_string(dim) + " is not a power of two");
    }
    if (dim > (std::size_t{1} << block_qubit_cap)) {
        throw CapacityError("unitary dimension " + std::to_string(dim) + " exceeds block cap 2^" +
                            std::to_string(block_qubit_cap));
    }
}

}  // namespace

double unitarity_defect(const Unitary &u) {
    if (u.rows() != u.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    Unitary gram = u.adjoint() * u;
    gram -= Unitary::Identity(u.rows(), u.cols());
    return gram.cwiseAbs().maxCoeff();
}

bool is_unitary(const Unitary &u, double tolerance) {
    return u.rows() > 0 && unitarity_defect(u) <= tolerance;
}

Unitary random_unitary(std::size_t dim, std::mt19937_64 &rng, int block_qubit_cap) {
    check_block_dim(dim, block_qubit_cap);
    auto n = static_cast<Eigen::Index>(dim);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Unitary z(n, n);
    // Column-major fill keeps the draw order independent of Eigen's storage.
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            double re = gauss(rng);
            double im = gauss(rng);
            z(r, c) = {re, im};
        }
    }
    Eigen::HouseholderQR<Unitary> qr(z);
    Unitary q = qr.householderQ() * Unitary::Identity(n, n);
    Unitary r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < n; ++k) {
        std::complex<double> diag = r(k, k);
        double mag = std::abs(diag);
        if (mag > 0) {
            q.col(k) *= diag / mag;
        }
    }
    return q;
}

Unitary random_unitary(std::size_t dim, std::uint64_t seed, int block_qubit_cap) {
    std::mt19937_64 rng(seed);
    return random_unitary(dim, rng, block_qubit_cap);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(splitmix64(base) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

Unitary hadamard_block(int qubits) {
    Eigen::Index dim = Eigen::Index{1} << qubits;
    double scale = std::pow(2.0, -0.5 * qubits);
    Unitary h(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            int parity = std::popcount(static_cast<std::uint64_t>(r & c)) & 1;
            h(r, c) = parity ? -scale : scale;
        }
    }
    return h;
}

}  // namespace groverlab

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

#include "groverlab/gates.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "groverlab/errors.h"
#include "test_util.h"

using namespace groverlab;
using groverlab::testing::bit;
using groverlab::testing::random_state;

namespace {

constexpr double kExact = 1e-12;
constexpr double kProperty = 1e-10;

/// Reference for apply_controlled_block: walks every basis index and
/// accumulates the block's column into a fresh output vector.
StateVector dense_controlled_reference(const StateVector &in,
                                       const std::vector<int> &controls,
                                       const std::vector<int> &targets,
                                       const Unitary &u) {
    std::vector<Amplitude> out(in.size());
    for (std::uint64_t i = 0; i < in.size(); ++i) {
        bool active = true;
        for (int c : controls) {
            active = active && bit(i, c) == 1;
        }
        if (!active) {
            out[i] += in[i];
            continue;
        }
        std::uint64_t col = 0;
        std::uint64_t cleared = i;
        for (std::size_t t = 0; t < targets.size(); ++t) {
            col |= static_cast<std::uint64_t>(bit(i, targets[t])) << t;
            cleared &= ~(std::uint64_t{1} << targets[t]);
        }
        for (Eigen::Index row = 0; row < u.rows(); ++row) {
            std::uint64_t j = cleared;
            for (std::size_t t = 0; t < targets.size(); ++t) {
                if ((static_cast<std::uint64_t>(row) >> t) & 1) {
                    j |= std::uint64_t{1} << targets[t];
                }
            }
            out[j] += u(row, static_cast<Eigen::Index>(col)) * in[i];
        }
    }
    return StateVector::from_amplitudes(std::move(out));
}

}  // namespace

TEST(gates, hadamard_examples) {
    auto s = StateVector::basis(1, 0);
    apply_h(s, 0);
    EXPECT_NEAR(s[0].real(), 1 / std::numbers::sqrt2, kExact);
    EXPECT_NEAR(s[1].real(), 1 / std::numbers::sqrt2, kExact);

    auto uniform = StateVector::basis(4, 0);
    for (int k = 0; k < 4; ++k) {
        apply_h(uniform, k);
    }
    for (std::size_t i = 0; i < 16; ++i) {
        EXPECT_NEAR(std::abs(uniform[i] - Amplitude(0.25)), 0, kExact) << i;
    }
}

TEST(gates, involutions) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto original = random_state(4, seed);
        auto s = original;
        int k = static_cast<int>(seed % 4);
        apply_h(s, k);
        apply_h(s, k);
        EXPECT_LT(max_amplitude_distance(s, original), kExact);
        apply_x(s, k);
        apply_x(s, k);
        EXPECT_LT(max_amplitude_distance(s, original), kExact);
        apply_z(s, k);
        apply_z(s, k);
        EXPECT_LT(max_amplitude_distance(s, original), kExact);
        apply_cnot(s, k, (k + 1) % 4);
        apply_cnot(s, k, (k + 1) % 4);
        EXPECT_LT(max_amplitude_distance(s, original), kExact);
        apply_ccx(s, k, (k + 1) % 4, (k + 2) % 4);
        apply_ccx(s, k, (k + 1) % 4, (k + 2) % 4);
        EXPECT_LT(max_amplitude_distance(s, original), kExact);
    }
}

TEST(gates, x_is_little_endian_exhaustive) {
    for (int q = 1; q <= 4; ++q) {
        for (int k = 0; k < q; ++k) {
            for (std::uint64_t i = 0; i < (std::uint64_t{1} << q); ++i) {
                auto s = StateVector::basis(q, i);
                apply_x(s, k);
                EXPECT_EQ(s, StateVector::basis(q, i ^ (std::uint64_t{1} << k))) << q << " " << k << " " << i;
            }
        }
    }
}

TEST(gates, toffoli_truth_table) {
    // Basis index 3 has q0 = q1 = 1.
    auto s = StateVector::basis(3, 3);
    apply_ccx(s, 0, 1, 2);
    EXPECT_EQ(s, StateVector::basis(3, 7));
    for (std::uint64_t i = 0; i < 8; ++i) {
        auto t = StateVector::basis(3, i);
        apply_ccx(t, 0, 1, 2);
        std::uint64_t expected = (bit(i, 0) && bit(i, 1)) ? i ^ 4 : i;
        EXPECT_EQ(t, StateVector::basis(3, expected)) << i;
    }
}

TEST(gates, cnot_builds_bell_state) {
    auto s = StateVector::basis(2, 0);
    apply_h(s, 0);
    apply_cnot(s, 0, 1);
    const double r = 1 / std::numbers::sqrt2;
    EXPECT_NEAR(std::abs(s[0] - r), 0, kExact);
    EXPECT_NEAR(std::abs(s[1]), 0, kExact);
    EXPECT_NEAR(std::abs(s[2]), 0, kExact);
    EXPECT_NEAR(std::abs(s[3] - r), 0, kExact);
}

TEST(gates, bad_indices) {
    auto s = StateVector::basis(3, 0);
    EXPECT_THROW(apply_h(s, 3), DomainError);
    EXPECT_THROW(apply_h(s, -1), DomainError);
    EXPECT_THROW(apply_x(s, 5), DomainError);
    EXPECT_THROW(apply_cnot(s, 1, 1), DomainError);
    EXPECT_THROW(apply_ccx(s, 0, 0, 2), DomainError);
    EXPECT_THROW(apply_ccx(s, 0, 1, 1), DomainError);
    EXPECT_THROW(apply_ccx(s, 0, 1, 3), DomainError);
    EXPECT_EQ(s, StateVector::basis(3, 0));
}

TEST(gates, controlled_block_examples) {
    const int controls[] = {0};
    const int targets[] = {1};
    Unitary x(2, 2);
    x << 0, 1, 1, 0;
    auto s = StateVector::basis(2, 1);
    apply_controlled_block(s, controls, targets, x);
    EXPECT_EQ(s, StateVector::basis(2, 3));

    auto r = random_state(3, 11);
    auto before = r;
    const int t2[] = {0, 2};
    apply_controlled_block(r, controls, targets, Unitary::Identity(2, 2));
    apply_controlled_block(r, {}, t2, Unitary::Identity(4, 4));
    EXPECT_EQ(r, before);

    auto n = random_state(3, 12);
    apply_controlled_block(n, {}, t2, random_unitary(4, 99));
    EXPECT_NEAR(n.norm_squared(), 1.0, kProperty);
}

TEST(gates, controlled_block_errors) {
    auto s = StateVector::basis(3, 0);
    const int c[] = {0};
    const int t[] = {1};
    const int overlap[] = {0};
    Unitary not_unitary(2, 2);
    not_unitary << 1, 1, 0, 1;
    EXPECT_THROW(apply_controlled_block(s, c, t, not_unitary), ValidationError);
    EXPECT_THROW(apply_controlled_block(s, c, t, Unitary::Identity(4, 4)), DomainError);
    EXPECT_THROW(apply_controlled_block(s, c, overlap, Unitary::Identity(2, 2)), DomainError);
    EXPECT_THROW(apply_controlled_block(s, c, {}, Unitary::Identity(1, 1)), DomainError);
}

TEST(gates, controlled_block_matches_dense_reference) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int q = 2 + static_cast<int>(rng() % 4);
        std::vector<int> qubits(q);
        std::iota(qubits.begin(), qubits.end(), 0);
        std::shuffle(qubits.begin(), qubits.end(), rng);
        const int num_targets = 1 + static_cast<int>(rng() % std::min(3, q));
        const int num_controls = static_cast<int>(rng() % (q - num_targets + 1));
        std::vector<int> targets(qubits.begin(), qubits.begin() + num_targets);
        std::vector<int> controls(qubits.begin() + num_targets, qubits.begin() + num_targets + num_controls);
        auto u = random_unitary(std::size_t{1} << num_targets, rng());
        auto state = random_state(q, rng());
        auto expected = dense_controlled_reference(state, controls, targets, u);
        apply_controlled_block(state, controls, targets, u);
        EXPECT_LT(max_amplitude_distance(state, expected), kExact) << "trial " << trial;
    }
}

TEST(gates, controlled_block_leaves_inactive_amplitudes_bitwise) {
    auto s = random_state(4, 5);
    auto before = s;
    const int c[] = {3};
    const int t[] = {0, 1};
    apply_controlled_block(s, c, t, random_unitary(4, 6));
    for (std::uint64_t i = 0; i < s.size(); ++i) {
        if (!bit(i, 3)) {
            EXPECT_EQ(s[i], before[i]) << i;
        }
    }
}

TEST(gates, oracle_flip_examples) {
    RegisterLayout layout(2, 0);
    auto s = StateVector::basis(3, 0);
    apply_h(s, 0);
    apply_h(s, 1);
    auto uniform = s;
    QueryLedger ledger;
    apply_oracle_flip(s, layout, 3, ledger);
    EXPECT_EQ(ledger.queries(), 1);
    EXPECT_EQ(s[3], Amplitude(0.0));
    EXPECT_NEAR(s[7].real(), 0.5, kExact);
    for (std::uint64_t i : {0, 1, 2}) {
        EXPECT_EQ(s[i], uniform[i]);
    }
    apply_oracle_flip(s, layout, 3, ledger);
    EXPECT_EQ(ledger.queries(), 2);
    EXPECT_EQ(s, uniform);

    EXPECT_THROW(apply_oracle_flip(s, layout, 4, ledger), DomainError);
    EXPECT_THROW(apply_oracle_flip(s, RegisterLayout(1, 0), 0, ledger), DomainError);
    EXPECT_EQ(ledger.queries(), 2);
}

TEST(gates, oracle_flip_on_one_index_qubit_gives_marked_start_state) {
    RegisterLayout layout(1, 0);
    auto s = StateVector::basis(2, 0);
    apply_h(s, 0);
    QueryLedger ledger;
    apply_oracle_flip(s, layout, 1, ledger);
    // (|x=0, flag=0> + |x=1, flag=1>) / sqrt(2): indices 0 and 1 + 2.
    const double r = 1 / std::numbers::sqrt2;
    EXPECT_NEAR(s[0].real(), r, kExact);
    EXPECT_NEAR(s[3].real(), r, kExact);
    EXPECT_EQ(s[1], Amplitude(0.0));
    EXPECT_EQ(s[2], Amplitude(0.0));
}

TEST(gates, oracle_flip_ignores_ancillas) {
    RegisterLayout layout(2, 1);
    auto s = random_state(layout.total_qubits(), 3);
    auto before = s;
    QueryLedger ledger;
    apply_oracle_flip(s, layout, 2, ledger);
    for (std::uint64_t i = 0; i < s.size(); ++i) {
        std::uint64_t source = (i & 3) == 2 ? i ^ layout.flag_mask() : i;
        EXPECT_EQ(s[i], before[source]) << i;
    }
}

TEST(gates, phase_oracle) {
    auto s = random_state(3, 8);
    auto before = s;
    QueryLedger ledger;
    apply_phase_oracle(s, 2, 1, ledger);
    EXPECT_EQ(ledger.queries(), 1);
    for (std::uint64_t i = 0; i < 8; ++i) {
        EXPECT_EQ(s[i], (i & 3) == 1 ? -before[i] : before[i]);
    }
    EXPECT_THROW(apply_phase_oracle(s, 2, 4, ledger), DomainError);
    EXPECT_THROW(apply_phase_oracle(s, 4, 0, ledger), DomainError);
}

TEST(gates, inner_product_examples) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto psi = random_state(3, seed);
        EXPECT_NEAR(std::abs(inner_product(psi, psi) - 1.0), 0, kExact);
    }
    EXPECT_EQ(inner_product(StateVector::basis(2, 1), StateVector::basis(2, 2)), Amplitude(0.0));
    auto plus = StateVector::basis(1, 0);
    apply_h(plus, 0);
    EXPECT_NEAR(std::abs(inner_product(plus, StateVector::basis(1, 0)) - 1 / std::numbers::sqrt2), 0, kExact);
    EXPECT_THROW(inner_product(plus, StateVector::basis(2, 0)), DomainError);
}

TEST(gates, inner_product_conjugates_first_argument) {
    auto a = StateVector::from_amplitudes({Amplitude(0, 1), 0});
    auto b = StateVector::from_amplitudes({1, 0});
    EXPECT_EQ(inner_product(a, b), Amplitude(0, -1));
}

TEST(gates, marginal_examples) {
    auto bell = StateVector::basis(2, 0);
    apply_h(bell, 0);
    apply_cnot(bell, 0, 1);
    const int q1[] = {1};
    EXPECT_NEAR(marginal_prob(bell, q1, 1), 0.5, kExact);

    const int all[] = {0, 1, 2};
    auto basis = StateVector::basis(3, 6);
    EXPECT_DOUBLE_EQ(marginal_prob(basis, all, 6), 1.0);
    EXPECT_DOUBLE_EQ(marginal_prob(basis, all, 5), 0.0);

    // Register order matters: value bit j belongs to qubits[j].
    const int reversed[] = {2, 1, 0};
    EXPECT_DOUBLE_EQ(marginal_prob(basis, reversed, 3), 1.0);

    EXPECT_THROW(marginal_prob(bell, q1, 2), DomainError);
    const int dup[] = {0, 0};
    EXPECT_THROW(marginal_prob(bell, dup, 0), DomainError);
}

TEST(gates, marginal_matches_brute_force_and_sums_to_one) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        auto psi = random_state(4, rng());
        std::vector<int> reg;
        for (int q = 0; q < 4; ++q) {
            if (rng() & 1) {
                reg.push_back(q);
            }
        }
        if (reg.empty()) {
            reg.push_back(static_cast<int>(rng() % 4));
        }
        std::shuffle(reg.begin(), reg.end(), rng);
        double total = 0;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << reg.size()); ++v) {
            double brute = 0;
            for (std::uint64_t i = 0; i < psi.size(); ++i) {
                std::uint64_t read = 0;
                for (std::size_t j = 0; j < reg.size(); ++j) {
                    read |= static_cast<std::uint64_t>(bit(i, reg[j])) << j;
                }
                if (read == v) {
                    brute += std::norm(psi[i]);
                }
            }
            double p = marginal_prob(psi, reg, v);
            EXPECT_NEAR(p, brute, kExact);
            EXPECT_GE(p, 0.0);
            total += p;
        }
        EXPECT_NEAR(total, 1.0, kExact);
    }
}

TEST(gates, norm_preserved_over_random_sequences) {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        const int q = 3 + static_cast<int>(rng() % 3);
        auto s = random_state(q, rng());
        for (int step = 0; step < 40; ++step) {
            std::vector<int> pick(q);
            std::iota(pick.begin(), pick.end(), 0);
            std::shuffle(pick.begin(), pick.end(), rng);
            const int a = pick[0];
            const int b = pick[1];
            const int c = pick[2];
            switch (rng() % 5) {
                case 0:
                    apply_h(s, a);
                    break;
                case 1:
                    apply_x(s, a);
                    break;
                case 2:
                    apply_cnot(s, a, b);
                    break;
                case 3:
                    apply_ccx(s, a, b, c);
                    break;
                default: {
                    const int ctl[] = {a};
                    const int tgt[] = {b, c};
                    apply_controlled_block(s, ctl, tgt, random_unitary(4, rng()));
                }
            }
        }
        EXPECT_NEAR(s.norm_squared(), 1.0, kProperty);
    }
}

TEST(gates, linearity) {
    std::mt19937_64 rng(4);
    const Amplitude alpha(0.3, -0.2);
    const Amplitude beta(-0.7, 0.5);
    for (int trial = 0; trial < 10; ++trial) {
        auto p1 = random_state(3, rng());
        auto p2 = random_state(3, rng());
        std::vector<Amplitude> mix(8);
        for (std::size_t i = 0; i < 8; ++i) {
            mix[i] = alpha * p1[i] + beta * p2[i];
        }
        auto combined = StateVector::from_amplitudes(mix);
        auto gate = [&](StateVector &s) {
            apply_h(s, 0);
            apply_ccx(s, 0, 1, 2);
            apply_cnot(s, 2, 1);
            const int t[] = {0, 2};
            apply_controlled_block(s, {}, t, random_unitary(4, 1234));
        };
        gate(p1);
        gate(p2);
        gate(combined);
        for (std::size_t i = 0; i < 8; ++i) {
            EXPECT_NEAR(std::abs(combined[i] - (alpha * p1[i] + beta * p2[i])), 0, kExact);
        }
    }
}

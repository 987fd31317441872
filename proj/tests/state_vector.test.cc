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

#include "groverlab/state_vector.h"

#include <cstdlib>

#include "gtest/gtest.h"
#include "groverlab/errors.h"

using namespace groverlab;

TEST(state_vector, basis_examples) {
    auto s = StateVector::basis(3, 5);
    ASSERT_EQ(s.num_qubits(), 3);
    ASSERT_EQ(s.size(), 8u);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(s[i], Amplitude(i == 5 ? 1.0 : 0.0)) << i;
    }

    auto one = StateVector::basis(1, 0);
    EXPECT_EQ(one[0], Amplitude(1.0));
    EXPECT_EQ(one[1], Amplitude(0.0));

    auto two = StateVector::basis(2, 3);
    std::vector<Amplitude> expected{0, 0, 0, 1};
    EXPECT_TRUE(std::equal(expected.begin(), expected.end(), two.amplitudes().begin()));
}

TEST(state_vector, basis_rejects_bad_sizes) {
    EXPECT_THROW(StateVector::basis(0, 0), CapacityError);
    EXPECT_THROW(StateVector::basis(27, 0), CapacityError);
    EXPECT_THROW(StateVector::basis(5, 0, 4), CapacityError);
    EXPECT_THROW(StateVector::basis(2, 4), DomainError);
    EXPECT_NO_THROW(StateVector::basis(4, 15, 4));
}

TEST(state_vector, qubit_cap_env_override) {
    ASSERT_EQ(setenv(kQubitCapEnvVar, "3", 1), 0);
    EXPECT_EQ(default_qubit_cap(), 3);
    EXPECT_THROW(StateVector::basis(4, 0), CapacityError);
    ASSERT_EQ(setenv(kQubitCapEnvVar, "junk", 1), 0);
    EXPECT_EQ(default_qubit_cap(), kDefaultQubitCap);
    ASSERT_EQ(unsetenv(kQubitCapEnvVar), 0);
    EXPECT_EQ(default_qubit_cap(), kDefaultQubitCap);
}

TEST(state_vector, from_amplitudes) {
    auto s = StateVector::from_amplitudes({0.6, 0, 0, Amplitude(0, 0.8)});
    EXPECT_EQ(s.num_qubits(), 2);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
    EXPECT_THROW(StateVector::from_amplitudes({1, 0, 0}), DomainError);
    EXPECT_THROW(StateVector::from_amplitudes({1}), DomainError);
    EXPECT_THROW(StateVector::from_amplitudes(std::vector<Amplitude>(16), 3), CapacityError);
}

TEST(state_vector, ledger_counts_up) {
    QueryLedger ledger;
    EXPECT_EQ(ledger.queries(), 0);
    ledger.record();
    ledger.record();
    EXPECT_EQ(ledger.queries(), 2);
}

TEST(state_vector, max_amplitude_distance) {
    auto a = StateVector::basis(2, 0);
    auto b = StateVector::basis(2, 1);
    EXPECT_DOUBLE_EQ(max_amplitude_distance(a, b), 1.0);
    EXPECT_DOUBLE_EQ(max_amplitude_distance(a, a), 0.0);
    EXPECT_THROW(max_amplitude_distance(a, StateVector::basis(3, 0)), DomainError);
}

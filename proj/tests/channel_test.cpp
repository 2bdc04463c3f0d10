// Copyright 2026 The qecmap Authors
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

#include "qecmap/channel.h"

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.h"

using namespace qecmap;
using qecmap::testing::uniform;

TEST(channel, make_diagonal_examples) {
    EXPECT_NO_THROW(make_diagonal(1, 1, 1, true));
    EXPECT_NO_THROW(make_diagonal(0.9, 0.9, 0.9, true));
    try {
        make_diagonal(1, 1, -1, true);
        FAIL() << "expected a CP violation";
    } catch (const CpViolation &e) {
        EXPECT_NE(std::string(e.what()).find("x+y-z = 3 > 1"), std::string::npos) << e.what();
    }
    EXPECT_NO_THROW(make_diagonal(1, 1, -1, false));
}

TEST(channel, transfer_row_enforced) {
    QubitChannel::Matrix m{};
    m[0] = {1, 0, 0, 0};
    EXPECT_NO_THROW(QubitChannel{m});
    m[0][2] = 1e-15;
    EXPECT_THROW(QubitChannel{m}, std::invalid_argument);
}

TEST(channel, conversion_examples) {
    EXPECT_EQ(diagonal_to_pauli_probs({1, 1, 1}), (PauliProbs{0, 0, 0}));
    const double p = 0.3;
    DiagonalChannel d = pauli_probs_to_diagonal({p / 3, p / 3, p / 3});
    EXPECT_NEAR(d.x, 1 - 4 * p / 3, 1e-15);
    EXPECT_NEAR(d.y, 1 - 4 * p / 3, 1e-15);
    EXPECT_NEAR(d.z, 1 - 4 * p / 3, 1e-15);
    EXPECT_EQ(pauli_probs_to_diagonal({0.5, 0, 0}), (DiagonalChannel{1, 0, 0}));
    EXPECT_THROW(diagonal_to_pauli_probs({1, 1, -1}), CpViolation);
    EXPECT_THROW(pauli_probs_to_diagonal({0.7, 0.7, 0}), CpViolation);
}

TEST(channel, depolarizing_examples) {
    EXPECT_EQ(depolarizing(0), (DiagonalChannel{1, 1, 1}));
    DiagonalChannel d = depolarizing(0.3151);
    EXPECT_NEAR(d.x, 0.7297, 1e-4);
    EXPECT_EQ(d.x, d.y);
    EXPECT_EQ(d.y, d.z);
    EXPECT_LT(depolarizing(60).x, 1e-20);
    EXPECT_THROW(depolarizing(-0.1), std::domain_error);
}

TEST(channel, fidelity_examples) {
    EXPECT_EQ(worst_case_fidelity({1, 1, 1}), 1.0);
    EXPECT_NEAR(worst_case_fidelity({0.729, 0.729, 0.9855}), 0.8645, 1e-12);
    EXPECT_EQ(worst_case_fidelity({0, 0, 0}), 0.5);
    EXPECT_NEAR(pure_state_fidelity({0.5, 0.7, 0.9}, 0, 0, 1), 0.95, 1e-15);
}

TEST(channel, apply_examples) {
    BlochVector4 v{1, 0.3, -0.2, 0.5};
    EXPECT_EQ(apply_channel(QubitChannel(), v), v);
    EXPECT_EQ(apply_channel(QubitChannel::diagonal(0.4, 0.5, 0.6), {1, 1, 0, 0}), (BlochVector4{1, 0.4, 0, 0}));
    BlochVector4 r = apply_channel(depolarizing(std::log(2.0)).to_matrix(), {1, 0, 0, 1});
    EXPECT_EQ(r[0], 1);
    EXPECT_NEAR(r[3], 0.5, 1e-15);
}

TEST(channel, conversion_round_trip) {
    for (int t = 0; t < 200; t++) {
        DiagonalChannel c = qecmap::testing::random_dyadic_diagonal();
        EXPECT_EQ(pauli_probs_to_diagonal(diagonal_to_pauli_probs(c)), c);
    }
    for (int t = 0; t < 200; t++) {
        DiagonalChannel c = qecmap::testing::random_physical_diagonal();
        DiagonalChannel back = pauli_probs_to_diagonal(diagonal_to_pauli_probs(c));
        EXPECT_NEAR(back.x, c.x, 1e-15);
        EXPECT_NEAR(back.y, c.y, 1e-15);
        EXPECT_NEAR(back.z, c.z, 1e-15);
    }
}

TEST(channel, cp_constraints_match_probability_simplex) {
    int physical = 0;
    for (int t = 0; t < 2000; t++) {
        DiagonalChannel c{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
        double px = (1 + c.x - c.y - c.z) / 4, py = (1 - c.x + c.y - c.z) / 4, pz = (1 - c.x - c.y + c.z) / 4;
        double pi = 1 - px - py - pz;
        bool in_simplex = px >= -kCpTolerance / 4 && py >= -kCpTolerance / 4 && pz >= -kCpTolerance / 4 &&
                          pi >= -kCpTolerance / 4;
        EXPECT_EQ(is_physical(c), in_simplex) << c.str();
        physical += in_simplex;
    }
    // Both sides of the boundary are exercised.
    EXPECT_GT(physical, 100);
    EXPECT_LT(physical, 1900);
}

TEST(channel, apply_preserves_identity_component) {
    for (int t = 0; t < 200; t++) {
        QubitChannel::Matrix m{};
        m[0] = {1, 0, 0, 0};
        for (size_t r = 1; r < 4; r++) {
            for (size_t c = 0; c < 4; c++) {
                m[r][c] = uniform(-1, 1);
            }
        }
        BlochVector4 out = apply_channel(QubitChannel(m), {1, uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)});
        EXPECT_EQ(out[0], 1.0);
    }
}

TEST(channel, worst_case_fidelity_is_permutation_invariant) {
    for (int t = 0; t < 200; t++) {
        DiagonalChannel c = qecmap::testing::random_physical_diagonal();
        double f = worst_case_fidelity(c);
        EXPECT_EQ(f, worst_case_fidelity({c.y, c.z, c.x}));
        EXPECT_EQ(f, worst_case_fidelity({c.z, c.x, c.y}));
        EXPECT_EQ(f, worst_case_fidelity({c.x, c.z, c.y}));
        // Attained by the eigenstate of the smallest axis, and no axis does worse.
        double fx = pure_state_fidelity(c, 1, 0, 0), fy = pure_state_fidelity(c, 0, 1, 0),
               fz = pure_state_fidelity(c, 0, 0, 1);
        EXPECT_NEAR(f, std::min({fx, fy, fz}), 1e-15);
    }
}

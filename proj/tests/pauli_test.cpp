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

#include "qecmap/pauli.h"

#include <gtest/gtest.h>

#include "qecmap/oracle.h"
#include "test_util.h"

using namespace qecmap;
using qecmap::testing::random_pauli;
using qecmap::testing::random_signed_pauli;
using qecmap::testing::rng;

namespace {

PauliString P(const char *text) {
    return parse_pauli(text).body;
}

DenseOperator dense_product(const PauliProduct &p) {
    static const std::complex<double> phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return phases[p.phase] * dense_pauli(SignedPauli{false, p.body});
}

}  // namespace

TEST(pauli, product_examples) {
    PauliProduct xz = pauli_mul(P("X"), P("Z"));
    EXPECT_EQ(xz.phase, 3);
    EXPECT_EQ(xz.body, P("Y"));
    EXPECT_FALSE(xz.is_hermitian());
    EXPECT_THROW(xz.to_signed(), std::domain_error);

    PauliProduct a = pauli_mul(P("ZZI"), P("XXX"));
    EXPECT_EQ(a.phase, 2);
    EXPECT_EQ(a.body, P("YYX"));

    PauliProduct b = pauli_mul(parse_pauli("III"), parse_pauli("-YYY"));
    EXPECT_EQ(b.phase, 2);
    EXPECT_EQ(b.body, P("YYY"));
    EXPECT_EQ(b.to_signed(), parse_pauli("-YYY"));
}

TEST(pauli, eta_examples) {
    EXPECT_EQ(eta(P("X"), P("Z")), -1);
    EXPECT_EQ(eta(P("XXX"), P("ZZI")), 1);
    for (int t = 0; t < 50; t++) {
        PauliString p = random_pauli(6);
        EXPECT_EQ(eta(p, PauliString(6)), 1);
    }
}

TEST(pauli, weights_examples) {
    EXPECT_EQ(weights(P("XYX")), (LetterWeights{2, 1, 0}));
    EXPECT_EQ(weights(P("III")), (LetterWeights{0, 0, 0}));
    EXPECT_EQ(weights(P("ZIZ")), (LetterWeights{0, 0, 2}));
    EXPECT_EQ(P("XYZI").weight(), 3u);
}

TEST(pauli, parse_examples) {
    SignedPauli a = parse_pauli("-YYY");
    EXPECT_TRUE(a.sign);
    EXPECT_EQ(a.body.str(), "YYY");
    SignedPauli b = parse_pauli("ZZI");
    EXPECT_FALSE(b.sign);
    EXPECT_EQ(b.body.str(), "ZZI");
    EXPECT_EQ(parse_pauli("+XZ"), parse_pauli("XZ"));

    try {
        parse_pauli("XZQ");
        FAIL() << "expected a parse error";
    } catch (const PauliParseError &e) {
        EXPECT_EQ(e.position, 2u);
    }
    EXPECT_THROW(parse_pauli(""), PauliParseError);
    EXPECT_THROW(parse_pauli("-"), PauliParseError);
    EXPECT_THROW(parse_pauli("+-X"), PauliParseError);
}

TEST(pauli, letter_layout) {
    PauliString p = P("XZYI");
    EXPECT_EQ(p.letter(0), PauliLetter::X);
    EXPECT_EQ(p.letter(1), PauliLetter::Z);
    EXPECT_EQ(p.letter(2), PauliLetter::Y);
    EXPECT_EQ(p.letter(3), PauliLetter::I);
    EXPECT_EQ(p.x_mask(), 0b0101u);
    EXPECT_EQ(p.z_mask(), 0b0110u);
}

TEST(pauli, format_round_trip) {
    for (int t = 0; t < 200; t++) {
        SignedPauli p = random_signed_pauli(1 + rng()() % 12);
        EXPECT_EQ(parse_pauli(p.str()), p);
    }
}

TEST(pauli, dimension_mismatch) {
    EXPECT_THROW(pauli_mul(P("XX"), P("XXX")), DimensionError);
    EXPECT_THROW(eta(P("XX"), P("XXX")), DimensionError);
}

TEST(pauli, product_matches_dense_and_is_associative) {
    for (int t = 0; t < 200; t++) {
        size_t n = 1 + rng()() % 3;
        SignedPauli a = random_signed_pauli(n), b = random_signed_pauli(n), c = random_signed_pauli(n);
        PauliProduct ab = pauli_mul(a, b);
        DenseOperator expected = dense_pauli(a) * dense_pauli(b);
        EXPECT_LT((dense_product(ab) - expected).cwiseAbs().maxCoeff(), 1e-12);

        PauliProduct bc = pauli_mul(b, c);
        PauliProduct left = pauli_mul(ab.body, c.body);
        PauliProduct right = pauli_mul(a.body, bc.body);
        uint8_t left_phase = (ab.phase + left.phase + (c.sign ? 2 : 0)) & 3;
        uint8_t right_phase = (bc.phase + right.phase + (a.sign ? 2 : 0)) & 3;
        EXPECT_EQ(left.body, right.body);
        EXPECT_EQ(left_phase, right_phase);
    }
}

TEST(pauli, eta_properties) {
    for (int t = 0; t < 200; t++) {
        size_t n = 1 + rng()() % 20;
        PauliString a = random_pauli(n), b = random_pauli(n), c = random_pauli(n);
        EXPECT_EQ(eta(a, b), eta(b, a));
        EXPECT_EQ(eta(a, pauli_mul(b, c).body), eta(a, b) * eta(a, c));
    }
}

TEST(pauli, commuting_products_are_hermitian) {
    int seen = 0;
    for (int t = 0; t < 2000 && seen < 200; t++) {
        size_t n = 1 + rng()() % 10;
        SignedPauli a = random_signed_pauli(n), b = random_signed_pauli(n);
        if (eta(a, b) == 1) {
            EXPECT_TRUE(pauli_mul(a, b).is_hermitian());
            seen++;
        } else {
            EXPECT_FALSE(pauli_mul(a, b).is_hermitian());
        }
    }
    EXPECT_EQ(seen, 200);
}

TEST(pauli, product_weight_bound) {
    for (int t = 0; t < 200; t++) {
        size_t n = 1 + rng()() % 30;
        PauliString a = random_pauli(n), b = random_pauli(n);
        EXPECT_LE(weights(pauli_mul(a, b).body).total(), a.weight() + b.weight());
    }
}

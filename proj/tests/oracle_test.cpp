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

#include "qecmap/oracle.h"

#include <gtest/gtest.h>

#include <cmath>

#include "qecmap/coding_map.h"
#include "test_util.h"

using namespace qecmap;
using qecmap::testing::random_physical_diagonal;

namespace {

const StabilizerCode &code(const std::string &name) {
    static std::map<std::string, StabilizerCode> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        it = cache.emplace(name, load_code(catalog_spec(name))).first;
    }
    return it->second;
}

double max_abs_diff(const QubitChannel &a, const QubitChannel &b) {
    double d = 0;
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            d = std::max(d, std::abs(a(r, c) - b(r, c)));
        }
    }
    return d;
}

}  // namespace

TEST(oracle, kraus_examples) {
    KrausSet id = kraus_from_diagonal({1, 1, 1});
    ASSERT_EQ(id.size(), 1u);
    EXPECT_LT((id[0] - Kraus1::Identity()).cwiseAbs().maxCoeff(), 1e-15);

    const double p = 0.3;
    double v = 1 - 4 * p / 3;
    KrausSet dep = kraus_from_diagonal({v, v, v});
    ASSERT_EQ(dep.size(), 4u);
    EXPECT_NEAR(dep[0](0, 0).real(), std::sqrt(0.7), 1e-12);
    EXPECT_NEAR(dep[1](0, 1).real(), std::sqrt(0.1), 1e-12);
    EXPECT_NEAR(dep[2](1, 0).imag(), std::sqrt(0.1), 1e-12);
    EXPECT_NEAR(dep[3](1, 1).real(), -std::sqrt(0.1), 1e-12);

    KrausSet flip = kraus_from_diagonal({1, 0, 0});
    ASSERT_EQ(flip.size(), 2u);
    EXPECT_NEAR(flip[0](0, 0).real(), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(flip[1](0, 1).real(), std::sqrt(0.5), 1e-15);

    EXPECT_THROW(kraus_from_diagonal({1, 1, -1}), CpViolation);
}

TEST(oracle, kraus_completeness) {
    for (int t = 0; t < 200; t++) {
        EXPECT_LT(kraus_completeness_error(kraus_from_diagonal(random_physical_diagonal())), 1e-12);
    }
}

TEST(oracle, dense_examples) {
    QubitChannel g = dense_effective_channel(code("bitflip"), kraus_from_diagonal({0.9, 0.9, 0.9}));
    EXPECT_LT(max_abs_diff(g, QubitChannel::diagonal(0.729, 0.729, 0.9855)), 1e-10);

    QubitChannel id = dense_effective_channel(code("bitflip"), {Kraus1::Identity()});
    EXPECT_LT(max_abs_diff(id, QubitChannel()), 1e-12);

    QubitChannel five = dense_effective_channel(code("five_bit"), kraus_from_diagonal(depolarizing(0.1)));
    EXPECT_NEAR(five(1, 1), five(2, 2), 1e-10);
    EXPECT_NEAR(five(2, 2), five(3, 3), 1e-10);
}

TEST(oracle, size_guard) {
    EXPECT_THROW(dense_effective_channel(code("steane"), {Kraus1::Identity()}), OracleSizeError);
}

TEST(oracle, agrees_with_fast_path) {
    for (const char *name : {"bitflip", "phaseflip", "phaseflip_prime", "five_bit"}) {
        for (int t = 0; t < 5; t++) {
            DiagonalChannel c = random_physical_diagonal();
            QubitChannel dense = dense_effective_channel(code(name), kraus_from_diagonal(c));
            QubitChannel fast = effective_channel_general(code(name), c.to_matrix());
            EXPECT_LE(max_abs_diff(dense, fast), 1e-10) << name << " " << c.str();
        }
    }
}

TEST(oracle, codeword_sanity) {
    for (const char *name : {"bitflip", "phaseflip", "phaseflip_prime", "five_bit"}) {
        DenseCode dc = build_dense_code(code(name));
        EXPECT_NEAR(dc.zero.norm(), 1, 1e-12);
        EXPECT_NEAR(std::abs(dc.zero.dot(dc.one)), 0, 1e-12);
        auto e = dense_encoding_ops(dc);
        // E_I is half the codespace projector.
        EXPECT_LT((e[0] - 0.5 * dc.codespace_projector).cwiseAbs().maxCoeff(), 1e-12) << name;
        // rho(0) for |0><0| is E_I + E_Z and lives in the codespace.
        DenseOperator rho = e[0] + e[3];
        EXPECT_LT((dc.codespace_projector * rho * dc.codespace_projector - rho).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(rho.trace().real(), 1, 1e-12);
        // Codewords are fixed by every generator.
        for (const SignedPauli &g : code(name).generators()) {
            EXPECT_LT((dense_pauli(g) * dc.zero - dc.zero).norm(), 1e-12);
            EXPECT_LT((dense_pauli(g) * dc.one - dc.one).norm(), 1e-12);
        }
    }
    DenseCode bf = build_dense_code(code("bitflip"));
    EXPECT_NEAR(bf.zero(0).real(), 1, 1e-12);
    EXPECT_NEAR(bf.one(7).real(), 1, 1e-12);
}

TEST(oracle, dense_expansions_match_symbolic) {
    for (const char *name : {"bitflip", "phaseflip", "five_bit"}) {
        const StabilizerCode &c = code(name);
        DenseCode dc = build_dense_code(c);
        auto e = dense_encoding_ops(dc);
        auto d = dense_decoding_ops(dc, e);
        for (size_t s = 0; s < 4; s++) {
            DenseOperator es = DenseOperator::Zero(e[s].rows(), e[s].cols());
            for (const auto &[m, coef] : c.encoding_expansion(s).terms()) {
                es += coef.to_double() * dense_pauli(SignedPauli{false, m});
            }
            EXPECT_LT((es - e[s]).cwiseAbs().maxCoeff(), 1e-12) << name << " E " << s;
            DenseOperator ds = DenseOperator::Zero(d[s].rows(), d[s].cols());
            for (const auto &[m, coef] : c.decoding_expansion(s).terms()) {
                ds += coef.to_double() * dense_pauli(SignedPauli{false, m});
            }
            EXPECT_LT((ds - d[s]).cwiseAbs().maxCoeff(), 1e-12) << name << " D " << s;
        }
    }
}

// Syndrome projectors resolve the identity, and the decoding map is trace
// preserving, on randomized relabelings of every small catalog code.
TEST(oracle, decoding_totality_and_completeness) {
    const char *bases[] = {"bitflip", "phaseflip", "phaseflip_prime", "five_bit"};
    for (int t = 0; t < 200; t++) {
        StabilizerCode c = qecmap::testing::random_equivalent_code(code(bases[t % 4]));
        DenseCode dc = build_dense_code(c);
        const Eigen::Index dim = dc.zero.size();
        DenseOperator sum = DenseOperator::Zero(dim, dim);
        for (const DenseOperator &p : dc.syndrome_projectors) {
            sum += p;
        }
        EXPECT_LT((sum - DenseOperator::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((decoding_completeness(dc) - DenseOperator::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(oracle, random_codes_agree_with_fast_path) {
    const char *bases[] = {"bitflip", "phaseflip", "five_bit"};
    for (int t = 0; t < 30; t++) {
        StabilizerCode c = qecmap::testing::random_equivalent_code(code(bases[t % 3]));
        DiagonalChannel d = random_physical_diagonal();
        EXPECT_LE(max_abs_diff(dense_effective_channel(c, kraus_from_diagonal(d)),
                               effective_channel_general(c, d.to_matrix())),
                  1e-10);
    }
}

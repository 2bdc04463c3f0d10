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

#include "qecmap/coding_map.h"

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.h"

using namespace qecmap;
using qecmap::testing::random_physical_diagonal;
using qecmap::testing::rng;
using qecmap::testing::uniform;

namespace {

// Builds a polynomial from (coefficient numerator, log2 denominator, a, b, c) tuples.
struct T {
    int64_t num;
    int log2den;
    uint32_t a, b, c;
};

Polynomial poly(std::initializer_list<T> terms) {
    Polynomial p;
    for (const T &t : terms) {
        p.add_term({t.a, t.b, t.c}, Dyadic(t.num, t.log2den));
    }
    return p;
}

PolyMap map_of(const std::string &name) {
    return diagonal_poly_map(catalog_code(name));
}

void expect_near(const QubitChannel &a, const QubitChannel &b, double tol) {
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            EXPECT_NEAR(a(r, c), b(r, c), tol) << "entry " << r << "," << c;
        }
    }
}

}  // namespace

TEST(coding_map, bitflip_map) {
    PolyMap m = map_of("bitflip");
    EXPECT_EQ(m.x(), poly({{1, 0, 3, 0, 0}}));
    EXPECT_EQ(m.y(), poly({{3, 1, 2, 1, 0}, {-1, 1, 0, 3, 0}}));
    EXPECT_EQ(m.z(), poly({{3, 1, 0, 0, 1}, {-1, 1, 0, 0, 3}}));
    EXPECT_EQ(m.pretty(), "x' = x^3\ny' = 3/2 x^2 y - 1/2 y^3\nz' = 3/2 z - 1/2 z^3\n");
}

TEST(coding_map, phaseflip_map) {
    PolyMap m = map_of("phaseflip");
    EXPECT_EQ(m.x(), poly({{3, 1, 1, 0, 0}, {-1, 1, 3, 0, 0}}));
    EXPECT_EQ(m.y(), poly({{3, 1, 0, 1, 2}, {-1, 1, 0, 3, 0}}));
    EXPECT_EQ(m.z(), poly({{1, 0, 0, 0, 3}}));
}

TEST(coding_map, steane_map) {
    PolyMap m = map_of("steane");
    Polynomial s = poly({{7, 2, 3, 0, 0}, {-3, 2, 7, 0, 0}});
    EXPECT_EQ(m.x(), s);
    EXPECT_EQ(m.z(), poly({{7, 2, 0, 0, 3}, {-3, 2, 0, 0, 7}}));
    EXPECT_EQ(
        m.y(),
        poly({{7, 4, 0, 3, 0}, {21, 3, 2, 1, 2}, {-21, 4, 4, 3, 0}, {-21, 4, 0, 3, 4}, {9, 4, 0, 7, 0}}));
}

TEST(coding_map, five_bit_map) {
    PolyMap m = map_of("five_bit");
    EXPECT_EQ(m.x(), poly({{5, 2, 1, 2, 0}, {5, 2, 1, 0, 2}, {-5, 2, 1, 2, 2}, {-1, 2, 5, 0, 0}}));
    EXPECT_EQ(m.y(), poly({{5, 2, 2, 1, 0}, {5, 2, 0, 1, 2}, {-5, 2, 2, 1, 2}, {-1, 2, 0, 5, 0}}));
    EXPECT_EQ(m.z(), poly({{5, 2, 2, 0, 1}, {5, 2, 0, 2, 1}, {-5, 2, 2, 2, 1}, {-1, 2, 0, 0, 5}}));
}

TEST(coding_map, shor_composition) {
    PolyMap shor = compose_maps(map_of("phaseflip"), map_of("bitflip"));
    EXPECT_EQ(shor, map_of("shor"));
    EXPECT_EQ(shor.x(), poly({{3, 1, 3, 0, 0}, {-1, 1, 9, 0, 0}}));
    // R(z) = ((3/2) z - (1/2) z^3)^3
    Polynomial r = poly({{27, 3, 0, 0, 3}, {-27, 3, 0, 0, 5}, {9, 3, 0, 0, 7}, {-1, 3, 0, 0, 9}});
    EXPECT_EQ(shor.z(), r);

    PolyMap prime = map_of("shor_prime");
    // x' = R(z), z' = P(x), same Q.
    EXPECT_EQ(prime.x(), poly({{27, 3, 0, 0, 3}, {-27, 3, 0, 0, 5}, {9, 3, 0, 0, 7}, {-1, 3, 0, 0, 9}}));
    EXPECT_EQ(prime.z(), poly({{3, 1, 3, 0, 0}, {-1, 1, 9, 0, 0}}));
    EXPECT_EQ(prime.y(), shor.y());
}

TEST(coding_map, identity_composition) {
    PolyMap m = map_of("steane");
    EXPECT_EQ(compose_maps(PolyMap::identity(), m), m);
    EXPECT_EQ(compose_maps(m, PolyMap::identity()), m);
}

TEST(coding_map, term_cap) {
    EXPECT_THROW(compose_maps(map_of("steane"), map_of("steane"), 5), CompositionTooLarge);
}

TEST(coding_map, evaluation_examples) {
    PolyMap shor = map_of("shor");
    EXPECT_EQ(eval_poly_map(shor, {1, 1, 1}), (DiagonalChannel{1, 1, 1}));
    EXPECT_NEAR(shor.z().evaluate(0, 0, 0.7297), 0.7297, 1e-3);
    double v = std::sqrt(2.0 / 3.0);
    DiagonalChannel f = eval_poly_map(map_of("five_bit"), {v, v, v});
    EXPECT_NEAR(f.x, v, 1e-12);
    EXPECT_NEAR(f.y, v, 1e-12);
    EXPECT_NEAR(f.z, v, 1e-12);
}

TEST(coding_map, general_channel_examples) {
    const StabilizerCode bf = catalog_code("bitflip").single();
    QubitChannel g = effective_channel_general(bf, QubitChannel::diagonal(0.9, 0.9, 0.9));
    expect_near(g, QubitChannel::diagonal(0.729, 0.729, 0.9855), 1e-12);

    for (const std::string &name : catalog_names()) {
        EffectiveChannelResult r = effective_channel_general(catalog_code(name), QubitChannel(), "identity");
        expect_near(r.g, QubitChannel(), 1e-15);
        EXPECT_EQ(r.path, ComputationPath::Generic);
    }

    DiagonalChannel d = depolarizing(0.1);
    QubitChannel five = effective_channel_general(catalog_code("five_bit").single(), d.to_matrix());
    EXPECT_NEAR(five(1, 1), five(2, 2), 1e-15);
    EXPECT_NEAR(five(2, 2), five(3, 3), 1e-15);
}

TEST(coding_map, per_site_channels) {
    const StabilizerCode st = catalog_code("steane").single();
    QubitChannel n1 = random_physical_diagonal().to_matrix();
    std::vector<QubitChannel> same(7, n1);
    expect_near(effective_channel_general(st, same), effective_channel_general(st, n1), 1e-15);
    EXPECT_THROW(effective_channel_general(st, std::vector<QubitChannel>(3, n1)), std::invalid_argument);

    // A noiseless site changes the result relative to uniform noise.
    std::vector<QubitChannel> mixed = same;
    mixed[0] = QubitChannel();
    EXPECT_GT(effective_channel_general(st, mixed)(1, 1), effective_channel_general(st, n1)(1, 1));
}

TEST(coding_map, generic_and_symbolic_paths_agree) {
    for (const std::string &name : catalog_names()) {
        ConcatenatedCode code = catalog_code(name);
        PolyMap m = diagonal_poly_map(code);
        for (int t = 0; t < 100; t++) {
            DiagonalChannel c = random_physical_diagonal();
            QubitChannel g = effective_channel_general(code, c.to_matrix()).g;
            DiagonalChannel s = eval_poly_map(m, c);
            EXPECT_LE(g.max_off_diagonal(), 1e-12) << name;
            EXPECT_NEAR(g(1, 1), s.x, 1e-12) << name;
            EXPECT_NEAR(g(2, 2), s.y, 1e-12) << name;
            EXPECT_NEAR(g(3, 3), s.z, 1e-12) << name;
        }
    }
}

TEST(coding_map, random_equivalent_codes_agree_across_paths) {
    const char *bases[] = {"bitflip", "phaseflip", "steane", "five_bit"};
    for (int t = 0; t < 200; t++) {
        StabilizerCode c = qecmap::testing::random_equivalent_code(catalog_code(bases[t % 4]).single());
        DiagonalChannel d = random_physical_diagonal();
        QubitChannel g = effective_channel_general(c, d.to_matrix());
        DiagonalChannel s = eval_poly_map(diagonal_poly_map(c), d);
        EXPECT_LE(g.max_off_diagonal(), 1e-12);
        EXPECT_NEAR(g(1, 1), s.x, 1e-12);
        EXPECT_NEAR(g(2, 2), s.y, 1e-12);
        EXPECT_NEAR(g(3, 3), s.z, 1e-12);
    }
}

TEST(coding_map, composition_is_exact) {
    const char *names[] = {"bitflip", "phaseflip", "phaseflip_prime", "five_bit", "steane"};
    const Dyadic grid[] = {Dyadic(-1), Dyadic(-1, 1), Dyadic(0), Dyadic(1, 1), Dyadic(1)};
    for (int t = 0; t < 200; t++) {
        PolyMap a = map_of(names[rng()() % 4]);
        PolyMap b = map_of(names[rng()() % 5]);
        PolyMap ab = compose_maps(a, b);
        Dyadic x = grid[rng()() % 5], y = grid[rng()() % 5], z = grid[rng()() % 5];
        Dyadic bx = b.x().evaluate_exact(x, y, z), by = b.y().evaluate_exact(x, y, z), bz = b.z().evaluate_exact(x, y, z);
        for (size_t v = 0; v < 3; v++) {
            EXPECT_EQ(ab.components[v].evaluate_exact(x, y, z), a.components[v].evaluate_exact(bx, by, bz));
        }
    }
}

TEST(coding_map, trace_preservation_and_cp_closure) {
    for (const std::string &name : catalog_names()) {
        ConcatenatedCode code = catalog_code(name);
        for (int t = 0; t < 200; t++) {
            DiagonalChannel c = random_physical_diagonal();
            QubitChannel g = effective_channel_general(code, c.to_matrix()).g;
            EXPECT_EQ(g.matrix()[0], (std::array<double, 4>{1, 0, 0, 0}));
            EXPECT_TRUE(is_physical({g(1, 1), g(2, 2), g(3, 3)}, 1e-12)) << name << " " << c.str();
        }
    }
}

TEST(coding_map, general_channel_trace_row) {
    // Non-diagonal inputs: amplitude damping with a unitary tilt.
    for (int t = 0; t < 50; t++) {
        double gamma = uniform(0, 1);
        QubitChannel::Matrix m{};
        m[0] = {1, 0, 0, 0};
        m[1] = {0, std::sqrt(1 - gamma), 0, 0};
        m[2] = {0, 0, std::sqrt(1 - gamma), 0};
        m[3] = {gamma, 0, 0, 1 - gamma};
        QubitChannel g = effective_channel_general(catalog_code("five_bit").single(), QubitChannel(m));
        EXPECT_EQ(g.matrix()[0], (std::array<double, 4>{1, 0, 0, 0}));
    }
}

TEST(coding_map, bitflip_suppresses_x_errors) {
    PolyMap bf = map_of("bitflip");
    for (int t = 0; t < 200; t++) {
        double p = uniform(0, 1);
        DiagonalChannel out = eval_poly_map(bf, {1, 1 - 2 * p, 1 - 2 * p});
        double expect = 1 - 6 * p * p + 4 * p * p * p;
        EXPECT_NEAR(out.x, 1, 1e-15);
        EXPECT_NEAR(out.y, expect, 1e-14);
        EXPECT_NEAR(out.z, expect, 1e-14);
    }
}

TEST(coding_map, bitflip_y_region) {
    PolyMap bf = map_of("bitflip");
    int improved = 0;
    for (int t = 0; t < 2000; t++) {
        double x = uniform(0, 1), y = uniform(0, 1);
        double out = bf.y().evaluate(x, y, 0);
        bool predicted = x > std::sqrt(2.0 / 3.0) && y > 0 && y < std::sqrt(std::max(0.0, 3 * x * x - 2));
        // Skip points within rounding of the region boundary.
        if (std::abs(out - y) < 1e-12) {
            continue;
        }
        EXPECT_EQ(out > y, predicted) << x << " " << y;
        improved += predicted;
    }
    EXPECT_GT(improved, 20);
}

TEST(coding_map, json_round_trip) {
    for (const std::string &name : catalog_names()) {
        PolyMap m = map_of(name);
        EXPECT_EQ(polymap_from_json(polymap_to_json(m)), m);
    }
    EXPECT_THROW(polymap_from_json("{\"x\": []}"), std::invalid_argument);
    EXPECT_THROW(polymap_from_json("not json"), std::invalid_argument);
}

TEST(coding_map, identity_is_fixed) {
    for (const std::string &name : catalog_names()) {
        EXPECT_EQ(eval_poly_map(map_of(name), {1, 1, 1}), (DiagonalChannel{1, 1, 1})) << name;
    }
}

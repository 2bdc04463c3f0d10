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

#ifndef QECMAP_POLYMAP_H
#define QECMAP_POLYMAP_H

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qecmap/channel.h"
#include "qecmap/dyadic.h"

namespace qecmap {

/// Exponent triple (a, b, c) for the monomial x^a y^b z^c.
using Exponents = std::array<uint32_t, 3>;

inline constexpr size_t kDefaultTermCap = 20000;

/// Raised when symbolic composition would exceed the configured term cap.
struct CompositionTooLarge : std::length_error {
    using std::length_error::length_error;
};

/// Sparse polynomial in (x, y, z) with exact dyadic coefficients. Zero
/// coefficients are never stored.
class Polynomial {
   public:
    Polynomial() = default;
    static Polynomial constant(Dyadic c);
    /// The single variable with index 0 (x), 1 (y) or 2 (z).
    static Polynomial variable(size_t var);

    const std::map<Exponents, Dyadic> &terms() const {
        return terms_;
    }
    size_t size() const {
        return terms_.size();
    }
    bool is_zero() const {
        return terms_.empty();
    }

    /// Coefficient of x^a y^b z^c (zero when absent).
    Dyadic coefficient(const Exponents &e) const;
    void add_term(const Exponents &e, const Dyadic &c);

    /// True when variable `var` appears in some term.
    bool depends_on(size_t var) const;
    uint32_t total_degree() const;

    Polynomial operator+(const Polynomial &other) const;
    Polynomial operator-(const Polynomial &other) const;
    Polynomial operator*(const Polynomial &other) const;
    Polynomial scaled(const Dyadic &c) const;

    double evaluate(double x, double y, double z) const;
    Dyadic evaluate_exact(const Dyadic &x, const Dyadic &y, const Dyadic &z) const;

    /// Substitutes (x, y, z) -> (sx, sy, sz). Throws CompositionTooLarge when any
    /// intermediate exceeds `term_cap` terms.
    Polynomial substitute(const std::array<Polynomial, 3> &subs, size_t term_cap = kDefaultTermCap) const;

    /// Human-readable form in the given variable names, e.g. "3/2 z - 1/2 z^3".
    std::string pretty(const std::array<std::string, 3> &names = {"x", "y", "z"}) const;

    bool operator==(const Polynomial &other) const = default;

   private:
    std::map<Exponents, Dyadic> terms_;
};

/// Coding map restricted to diagonal channels: [x,y,z] -> [x', y', z'].
struct PolyMap {
    std::array<Polynomial, 3> components;

    static PolyMap identity();

    const Polynomial &x() const {
        return components[0];
    }
    const Polynomial &y() const {
        return components[1];
    }
    const Polynomial &z() const {
        return components[2];
    }

    /// Three lines "x' = ...", "y' = ...", "z' = ...".
    std::string pretty() const;

    bool operator==(const PolyMap &other) const = default;
};

/// outer o inner: inner's polynomials substituted into outer's variables.
PolyMap compose_maps(const PolyMap &outer, const PolyMap &inner, size_t term_cap = kDefaultTermCap);

DiagonalChannel eval_poly_map(const PolyMap &m, const DiagonalChannel &c);

/// Floating-point form of a PolyMap laid out for the evaluation kernels.
class NumericPolyMap {
   public:
    explicit NumericPolyMap(const PolyMap &m);

    DiagonalChannel operator()(const DiagonalChannel &c) const;

    /// In-place batched evaluation over structure-of-arrays channels.
    void apply_batch(std::span<double> x, std::span<double> y, std::span<double> z) const;

   private:
    struct Component {
        std::vector<double> coef;
        std::vector<uint32_t> ex, ey, ez;
    };
    std::array<Component, 3> parts_;
};

}  // namespace qecmap

#endif

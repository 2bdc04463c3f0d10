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

#include "qecmap/polymap.h"

#include <algorithm>
#include <cmath>

#include "qecmap/kernels/kernels.h"

namespace qecmap {

namespace {

Dyadic dyadic_pow(Dyadic base, uint32_t e) {
    Dyadic r(1);
    while (e) {
        if (e & 1) {
            r *= base;
        }
        e >>= 1;
        if (e) {
            base *= base;
        }
    }
    return r;
}

void check_cap(const Polynomial &p, size_t cap) {
    if (p.size() > cap) {
        throw CompositionTooLarge(
            "symbolic composition exceeds " + std::to_string(cap) +
            " terms per polynomial; iterate the maps numerically instead");
    }
}

}  // namespace

Polynomial Polynomial::constant(Dyadic c) {
    Polynomial p;
    p.add_term({0, 0, 0}, c);
    return p;
}

Polynomial Polynomial::variable(size_t var) {
    Exponents e{0, 0, 0};
    e.at(var) = 1;
    Polynomial p;
    p.add_term(e, Dyadic(1));
    return p;
}

Dyadic Polynomial::coefficient(const Exponents &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Dyadic() : it->second;
}

void Polynomial::add_term(const Exponents &e, const Dyadic &c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

bool Polynomial::depends_on(size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto &kv) { return kv.first[var] != 0; });
}

uint32_t Polynomial::total_degree() const {
    uint32_t d = 0;
    for (const auto &[e, c] : terms_) {
        d = std::max(d, e[0] + e[1] + e[2]);
    }
    return d;
}

Polynomial Polynomial::operator+(const Polynomial &other) const {
    Polynomial r = *this;
    for (const auto &[e, c] : other.terms_) {
        r.add_term(e, c);
    }
    return r;
}

Polynomial Polynomial::operator-(const Polynomial &other) const {
    return *this + other.scaled(Dyadic(-1));
}

Polynomial Polynomial::operator*(const Polynomial &other) const {
    Polynomial r;
    for (const auto &[ea, ca] : terms_) {
        for (const auto &[eb, cb] : other.terms_) {
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Dyadic &c) const {
    Polynomial r;
    for (const auto &[e, v] : terms_) {
        r.add_term(e, v * c);
    }
    return r;
}

double Polynomial::evaluate(double x, double y, double z) const {
    double acc = 0;
    for (const auto &[e, c] : terms_) {
        acc += c.to_double() * std::pow(x, e[0]) * std::pow(y, e[1]) * std::pow(z, e[2]);
    }
    return acc;
}

Dyadic Polynomial::evaluate_exact(const Dyadic &x, const Dyadic &y, const Dyadic &z) const {
    Dyadic acc;
    for (const auto &[e, c] : terms_) {
        acc += c * dyadic_pow(x, e[0]) * dyadic_pow(y, e[1]) * dyadic_pow(z, e[2]);
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::array<Polynomial, 3> &subs, size_t term_cap) const {
    // powers[v][k] = subs[v]^k, filled lazily.
    std::array<std::vector<Polynomial>, 3> powers;
    auto power = [&](size_t v, uint32_t k) -> const Polynomial & {
        auto &cache = powers[v];
        if (cache.empty()) {
            cache.push_back(Polynomial::constant(Dyadic(1)));
        }
        while (cache.size() <= k) {
            Polynomial next = cache.back() * subs[v];
            check_cap(next, term_cap);
            cache.push_back(std::move(next));
        }
        return cache[k];
    };

    Polynomial result;
    for (const auto &[e, c] : terms_) {
        Polynomial term = power(0, e[0]) * power(1, e[1]);
        check_cap(term, term_cap);
        term = term * power(2, e[2]);
        check_cap(term, term_cap);
        result = result + term.scaled(c);
        check_cap(result, term_cap);
    }
    return result;
}

std::string Polynomial::pretty(const std::array<std::string, 3> &names) const {
    if (terms_.empty()) {
        return "0";
    }
    std::vector<std::pair<Exponents, Dyadic>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(), [](const auto &a, const auto &b) {
        uint32_t da = a.first[0] + a.first[1] + a.first[2];
        uint32_t db = b.first[0] + b.first[1] + b.first[2];
        if (da != db) {
            return da < db;
        }
        return a.first > b.first;
    });

    std::string out;
    bool first = true;
    for (const auto &[e, c] : order) {
        bool negative = c < Dyadic(0);
        Dyadic mag = negative ? -c : c;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string mono;
        for (size_t v = 0; v < 3; v++) {
            if (e[v] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += " ";
            }
            mono += names[v];
            if (e[v] > 1) {
                mono += "^" + std::to_string(e[v]);
            }
        }
        if (mono.empty()) {
            out += mag.str();
        } else if (mag == Dyadic(1)) {
            out += mono;
        } else {
            out += mag.str() + " " + mono;
        }
    }
    return out;
}

PolyMap PolyMap::identity() {
    return PolyMap{{Polynomial::variable(0), Polynomial::variable(1), Polynomial::variable(2)}};
}

std::string PolyMap::pretty() const {
    return "x' = " + components[0].pretty() + "\n" + "y' = " + components[1].pretty() + "\n" +
           "z' = " + components[2].pretty() + "\n";
}

PolyMap compose_maps(const PolyMap &outer, const PolyMap &inner, size_t term_cap) {
    PolyMap out;
    for (size_t v = 0; v < 3; v++) {
        out.components[v] = outer.components[v].substitute(inner.components, term_cap);
    }
    return out;
}

DiagonalChannel eval_poly_map(const PolyMap &m, const DiagonalChannel &c) {
    return NumericPolyMap(m)(c);
}

NumericPolyMap::NumericPolyMap(const PolyMap &m) {
    for (size_t v = 0; v < 3; v++) {
        auto &part = parts_[v];
        for (const auto &[e, c] : m.components[v].terms()) {
            part.coef.push_back(c.to_double());
            part.ex.push_back(e[0]);
            part.ey.push_back(e[1]);
            part.ez.push_back(e[2]);
        }
    }
}

DiagonalChannel NumericPolyMap::operator()(const DiagonalChannel &c) const {
    double x = c.x, y = c.y, z = c.z;
    apply_batch({&x, 1}, {&y, 1}, {&z, 1});
    return DiagonalChannel{x, y, z};
}

void NumericPolyMap::apply_batch(std::span<double> x, std::span<double> y, std::span<double> z) const {
    if (x.size() != y.size() || x.size() != z.size()) {
        throw std::invalid_argument("apply_batch: component spans differ in length");
    }
    const auto &k = kernels::active();
    std::array<std::vector<double>, 3> out;
    for (size_t v = 0; v < 3; v++) {
        const auto &part = parts_[v];
        out[v].resize(x.size());
        k.poly_eval(kernels::PolyTerms{part.coef, part.ex, part.ey, part.ez}, x, y, z, out[v]);
    }
    std::copy(out[0].begin(), out[0].end(), x.begin());
    std::copy(out[1].begin(), out[1].end(), y.begin());
    std::copy(out[2].begin(), out[2].end(), z.begin());
}

}  // namespace qecmap

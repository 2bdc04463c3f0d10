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

#include <json.hpp>
#include <vector>

namespace qecmap {

namespace {

QubitChannel evaluate_pairs(const StabilizerCode &code, std::span<const double> table, const kernels::KernelSet &k) {
    const ExpansionPairs &pairs = code.expansion_pairs();
    QubitChannel::Matrix g{};
    for (size_t s = 0; s < 4; s++) {
        for (size_t t = 0; t < 4; t++) {
            const auto &block = pairs.blocks[s][t];
            g[s][t] = k.product_sum(table, block.idx, block.coef, code.n());
        }
    }
    return QubitChannel(g);
}

void append_table(std::vector<double> &table, const QubitChannel &c) {
    for (size_t r = 0; r < 4; r++) {
        for (size_t col = 0; col < 4; col++) {
            table.push_back(c(r, col));
        }
    }
}

}  // namespace

QubitChannel effective_channel_general(
    const StabilizerCode &code, const QubitChannel &n1, const kernels::KernelSet &k) {
    std::vector<double> table;
    table.reserve(16 * code.n());
    for (size_t i = 0; i < code.n(); i++) {
        append_table(table, n1);
    }
    return evaluate_pairs(code, table, k);
}

QubitChannel effective_channel_general(
    const StabilizerCode &code, std::span<const QubitChannel> per_site, const kernels::KernelSet &k) {
    if (per_site.size() != code.n()) {
        throw std::invalid_argument(
            "code " + code.name() + " has " + std::to_string(code.n()) + " qubits but " +
            std::to_string(per_site.size()) + " site channels were given");
    }
    std::vector<double> table;
    table.reserve(16 * code.n());
    for (const QubitChannel &c : per_site) {
        append_table(table, c);
    }
    return evaluate_pairs(code, table, k);
}

EffectiveChannelResult effective_channel_general(
    const ConcatenatedCode &code, const QubitChannel &n1, const std::string &input_description) {
    QubitChannel g = n1;
    for (auto it = code.layers.rbegin(); it != code.layers.rend(); ++it) {
        g = effective_channel_general(**it, g);
    }
    return EffectiveChannelResult{g, code.name, input_description, ComputationPath::Generic};
}

PolyMap diagonal_poly_map(const StabilizerCode &code) {
    // G_ss = sum over shared monomials of beta * alpha, alpha = 2^n * E coefficient;
    // each monomial contributes x^{w_X} y^{w_Y} z^{w_Z}.
    const Dyadic scale(int64_t{1} << code.n());
    PolyMap m;
    for (size_t sigma = 1; sigma < 4; sigma++) {
        const PauliExpansion &e = code.encoding_expansion(sigma);
        Polynomial poly;
        for (const auto &[mono, beta] : code.decoding_expansion(sigma).terms()) {
            Dyadic alpha = e.coefficient(mono) * scale;
            LetterWeights w = weights(mono);
            poly.add_term(
                {static_cast<uint32_t>(w.x), static_cast<uint32_t>(w.y), static_cast<uint32_t>(w.z)}, beta * alpha);
        }
        m.components[sigma - 1] = std::move(poly);
    }
    return m;
}

PolyMap diagonal_poly_map(const ConcatenatedCode &code, size_t term_cap) {
    if (code.layers.empty()) {
        return PolyMap::identity();
    }
    PolyMap m = diagonal_poly_map(*code.layers.back());
    for (auto it = code.layers.rbegin() + 1; it != code.layers.rend(); ++it) {
        m = compose_maps(diagonal_poly_map(**it), m, term_cap);
    }
    return m;
}

std::string polymap_to_json(const PolyMap &m) {
    nlohmann::json doc;
    const char *keys[] = {"x", "y", "z"};
    for (size_t v = 0; v < 3; v++) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &[e, c] : m.components[v].terms()) {
            arr.push_back({{"e", {e[0], e[1], e[2]}}, {"num", c.num()}, {"log2den", c.log2den()}});
        }
        doc[keys[v]] = arr;
    }
    return doc.dump();
}

PolyMap polymap_from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("polymap JSON: ") + e.what());
    }
    PolyMap m;
    const char *keys[] = {"x", "y", "z"};
    for (size_t v = 0; v < 3; v++) {
        if (!doc.contains(keys[v]) || !doc[keys[v]].is_array()) {
            throw std::invalid_argument(std::string("polymap JSON: missing array \"") + keys[v] + "\"");
        }
        for (const auto &term : doc[keys[v]]) {
            try {
                auto e = term.at("e").get<std::array<uint32_t, 3>>();
                Dyadic c(term.at("num").get<int64_t>(), term.at("log2den").get<int>());
                m.components[v].add_term(e, c);
            } catch (const nlohmann::json::exception &ex) {
                throw std::invalid_argument(std::string("polymap JSON term in \"") + keys[v] + "\": " + ex.what());
            }
        }
    }
    return m;
}

}  // namespace qecmap

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

#include "qecmap/stabilizer_code.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <tuple>

namespace qecmap {

namespace {

constexpr size_t kMaxCodeQubits = 20;

SignedPauli identity_pauli(size_t n) {
    return SignedPauli{false, PauliString(n)};
}

SignedPauli hermitian_product(const SignedPauli &a, const SignedPauli &b) {
    return pauli_mul(a, b).to_signed();
}

// Rank check over GF(2) on the concatenated (x|z) bit vectors.
void require_independent(const std::vector<SignedPauli> &gens) {
    // Each reduced row keeps its pivot and which original generators it combines.
    struct Row {
        uint64_t x, z;
        uint64_t combo;
    };
    std::vector<Row> basis;
    for (size_t k = 0; k < gens.size(); k++) {
        Row r{gens[k].body.x_mask(), gens[k].body.z_mask(), uint64_t{1} << k};
        for (const Row &b : basis) {
            // Pivot: lowest set bit of (x, then z).
            uint64_t bx = b.x & -b.x;
            uint64_t bz = b.z & -b.z;
            bool hit = bx ? (r.x & bx) != 0 : (r.z & bz) != 0;
            if (hit) {
                r.x ^= b.x;
                r.z ^= b.z;
                r.combo ^= b.combo;
            }
        }
        if (r.x == 0 && r.z == 0) {
            std::string others;
            for (size_t j = 0; j < k; j++) {
                if ((r.combo >> j) & 1) {
                    others += (others.empty() ? "" : ", ") + std::to_string(j) + " (" + gens[j].str() + ")";
                }
            }
            throw CodeError(
                "generator " + std::to_string(k) + " (" + gens[k].str() + ") is dependent on generators " +
                (others.empty() ? std::string("(identity)") : others));
        }
        basis.push_back(r);
    }
}

}  // namespace

Dyadic PauliExpansion::coefficient(const PauliString &p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Dyadic() : it->second;
}

void PauliExpansion::add(const PauliString &p, const Dyadic &c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

std::string syndrome_str(Syndrome s, size_t num_generators) {
    std::string out(num_generators, '0');
    for (size_t k = 0; k < num_generators; k++) {
        if ((s >> k) & 1) {
            out[k] = '1';
        }
    }
    return out;
}

Syndrome parse_syndrome(const std::string &text, size_t num_generators) {
    if (text.size() != num_generators) {
        throw CodeError(
            "syndrome \"" + text + "\" must have exactly " + std::to_string(num_generators) + " bits");
    }
    Syndrome s = 0;
    for (size_t k = 0; k < text.size(); k++) {
        if (text[k] == '1') {
            s |= Syndrome{1} << k;
        } else if (text[k] != '0') {
            throw CodeError("syndrome \"" + text + "\" contains a character other than 0/1");
        }
    }
    return s;
}

Syndrome syndrome_of(const PauliString &error, const std::vector<SignedPauli> &generators) {
    Syndrome s = 0;
    for (size_t k = 0; k < generators.size(); k++) {
        if (eta(error, generators[k].body) < 0) {
            s |= Syndrome{1} << k;
        }
    }
    return s;
}

SyndromeTable build_recovery(const std::vector<SignedPauli> &generators, const RecoveryPolicy &policy) {
    if (generators.empty()) {
        throw CodeError("code needs at least one generator");
    }
    const size_t n = generators[0].num_qubits();
    const size_t num_syndromes = size_t{1} << generators.size();

    if (const auto *entries = std::get_if<ExplicitRecoveries>(&policy)) {
        std::vector<std::optional<SignedPauli>> slots(num_syndromes);
        for (const auto &[key, op_text] : *entries) {
            Syndrome s = parse_syndrome(key, generators.size());
            SignedPauli op = parse_pauli(op_text);
            if (op.num_qubits() != n) {
                throw CodeError("recovery operator " + op_text + " has the wrong number of qubits");
            }
            Syndrome actual = syndrome_of(op.body, generators);
            if (actual != s) {
                throw CodeError(
                    "recovery for syndrome " + key + " (" + op.str() + ") actually has syndrome " +
                    syndrome_str(actual, generators.size()));
            }
            if (slots[s]) {
                throw CodeError("syndrome " + key + " listed twice in the recovery table");
            }
            slots[s] = op;
        }
        std::vector<SignedPauli> table;
        for (size_t s = 0; s < num_syndromes; s++) {
            if (!slots[s]) {
                throw CodeError(
                    "recovery table is missing syndrome " + syndrome_str(s, generators.size()));
            }
            table.push_back(*slots[s]);
        }
        return SyndromeTable(std::move(table));
    }

    using Key = std::tuple<size_t, size_t, uint64_t, uint64_t>;
    std::vector<std::optional<Key>> best(num_syndromes);
    size_t filled = 0;
    for (size_t w = 0; w <= n && filled < num_syndromes; w++) {
        std::vector<std::optional<Key>> level(num_syndromes);
        // Every support of size w (Gosper's hack), every letter assignment on it.
        uint64_t support = w == 0 ? 0 : (w == 64 ? ~uint64_t{0} : (uint64_t{1} << w) - 1);
        const uint64_t limit = n == 64 ? 0 : (uint64_t{1} << n);
        while (true) {
            std::vector<size_t> sites;
            for (size_t q = 0; q < n; q++) {
                if ((support >> q) & 1) {
                    sites.push_back(q);
                }
            }
            size_t combos = 1;
            for (size_t i = 0; i < w; i++) {
                combos *= 3;
            }
            for (size_t c = 0; c < combos; c++) {
                PauliString p(n);
                size_t code = c;
                for (size_t q : sites) {
                    p.set_letter(q, static_cast<PauliLetter>(1 + code % 3));
                    code /= 3;
                }
                Syndrome s = syndrome_of(p, generators);
                if (best[s]) {
                    continue;
                }
                Key key{w, std::popcount(p.x_mask()) + std::popcount(p.z_mask()), p.x_mask(), p.z_mask()};
                if (!level[s] || key < *level[s]) {
                    level[s] = key;
                }
            }
            if (w == 0) {
                break;
            }
            uint64_t lowest = support & -support;
            uint64_t ripple = support + lowest;
            if (ripple == 0 || (limit != 0 && ripple >= limit)) {
                break;
            }
            support = (((ripple ^ support) >> 2) / lowest) | ripple;
            if (limit != 0 && support >= limit) {
                break;
            }
        }
        for (size_t s = 0; s < num_syndromes; s++) {
            if (!best[s] && level[s]) {
                best[s] = level[s];
                filled++;
            }
        }
    }
    std::vector<SignedPauli> table;
    for (size_t s = 0; s < num_syndromes; s++) {
        if (!best[s]) {
            throw CodeError("no Pauli operator has syndrome " + syndrome_str(s, generators.size()));
        }
        table.push_back(SignedPauli{false, PauliString(n, std::get<2>(*best[s]), std::get<3>(*best[s]))});
    }
    return SyndromeTable(std::move(table));
}

const SignedPauli &StabilizerCode::logical(size_t sigma) const {
    switch (sigma) {
        case 0:
            return identity_;
        case 1:
            return logical_x_;
        case 2:
            return logical_y_;
        case 3:
            return logical_z_;
    }
    throw std::out_of_range("logical index must be 0..3");
}

int64_t StabilizerCode::f_coefficient(size_t k, size_t sigma) const {
    const SignedPauli &bar = logical(sigma);
    int64_t f = 0;
    for (const SignedPauli &r : recovery_.entries()) {
        f += eta(group_.at(k), r) * eta(r, bar);
    }
    return f;
}

const ExpansionPairs &StabilizerCode::expansion_pairs() const {
    std::call_once(pair_cache_->once, [this] {
        auto pairs = std::make_unique<ExpansionPairs>();
        // alpha coefficients live in the (mu/2) basis: alpha = 2^n * E coefficient.
        const Dyadic scale(int64_t{1} << n_);
        for (size_t s = 0; s < 4; s++) {
            for (size_t t = 0; t < 4; t++) {
                auto &block = pairs->blocks[s][t];
                const auto &dterms = decoding_[s].terms();
                const auto &eterms = encoding_[t].terms();
                const size_t count = dterms.size() * eterms.size();
                block.coef.reserve(count);
                block.idx.assign(count * n_, 0);
                size_t p = 0;
                for (const auto &[dm, beta] : dterms) {
                    for (const auto &[em, ecoef] : eterms) {
                        block.coef.push_back((beta * ecoef * scale).to_double());
                        for (size_t i = 0; i < n_; i++) {
                            block.idx[i * count + p] = static_cast<int32_t>(
                                16 * i + 4 * static_cast<size_t>(dm.letter(i)) + static_cast<size_t>(em.letter(i)));
                        }
                        p++;
                    }
                }
            }
        }
        pair_cache_->pairs = std::move(pairs);
    });
    return *pair_cache_->pairs;
}

StabilizerCode load_code_parts(
    std::string name,
    std::vector<SignedPauli> generators,
    SignedPauli logical_x,
    SignedPauli logical_z,
    const RecoveryPolicy &policy) {
    const size_t n = logical_x.num_qubits();
    if (n < 1 || n > kMaxCodeQubits) {
        throw CodeError("register size must be between 1 and " + std::to_string(kMaxCodeQubits) + " qubits");
    }
    if (generators.size() != n - 1) {
        throw CodeError(
            "a code storing one qubit in " + std::to_string(n) + " qubits needs " + std::to_string(n - 1) +
            " generators, got " + std::to_string(generators.size()));
    }
    auto check_size = [&](const SignedPauli &p, const std::string &what) {
        if (p.num_qubits() != n) {
            throw CodeError(what + " " + p.str() + " does not act on " + std::to_string(n) + " qubits");
        }
    };
    for (size_t k = 0; k < generators.size(); k++) {
        check_size(generators[k], "generator " + std::to_string(k));
    }
    check_size(logical_z, "logical Z");

    for (size_t a = 0; a < generators.size(); a++) {
        for (size_t b = a + 1; b < generators.size(); b++) {
            if (eta(generators[a], generators[b]) < 0) {
                throw CodeError(
                    "generators " + std::to_string(a) + " (" + generators[a].str() + ") and " + std::to_string(b) +
                    " (" + generators[b].str() + ") anticommute");
            }
        }
    }
    require_independent(generators);
    for (size_t k = 0; k < generators.size(); k++) {
        if (eta(generators[k], logical_x) < 0) {
            throw CodeError(
                "logical X " + logical_x.str() + " anticommutes with generator " + std::to_string(k) + " (" +
                generators[k].str() + ")");
        }
        if (eta(generators[k], logical_z) < 0) {
            throw CodeError(
                "logical Z " + logical_z.str() + " anticommutes with generator " + std::to_string(k) + " (" +
                generators[k].str() + ")");
        }
    }
    if (eta(logical_x, logical_z) > 0) {
        throw CodeError("logical X " + logical_x.str() + " and logical Z " + logical_z.str() + " commute");
    }

    StabilizerCode code;
    code.name_ = std::move(name);
    code.n_ = n;
    code.generators_ = std::move(generators);
    code.identity_ = identity_pauli(n);
    code.logical_x_ = logical_x;
    code.logical_z_ = logical_z;
    // Y-bar = i X-bar Z-bar; X-bar Z-bar carries -+i because they anticommute.
    PauliProduct xz = pauli_mul(logical_x, logical_z);
    xz.phase = static_cast<uint8_t>((xz.phase + 1) % 4);
    code.logical_y_ = xz.to_signed();

    code.group_.reserve(size_t{1} << code.generators_.size());
    code.group_.push_back(identity_pauli(n));
    for (const SignedPauli &g : code.generators_) {
        size_t half = code.group_.size();
        for (size_t k = 0; k < half; k++) {
            code.group_.push_back(hermitian_product(code.group_[k], g));
        }
    }
    code.recovery_ = build_recovery(code.generators_, policy);

    const size_t group_size = code.group_.size();
    int log2_group = static_cast<int>(code.generators_.size());
    for (size_t sigma = 0; sigma < 4; sigma++) {
        const SignedPauli &bar = code.logical(sigma);
        for (size_t k = 0; k < group_size; k++) {
            SignedPauli prod = hermitian_product(code.group_[k], bar);
            int64_t sign = prod.sign ? -1 : 1;
            code.encoding_[sigma].add(prod.body, Dyadic(sign, static_cast<int>(n)));
            int64_t f = code.f_coefficient(k, sigma);
            code.decoding_[sigma].add(prod.body, Dyadic(sign * f, log2_group));
        }
    }
    return code;
}

StabilizerCode load_code(const CodeSpec &spec) {
    if (spec.is_concatenation()) {
        throw CodeError("spec \"" + spec.name + "\" is a concatenation recipe, not a single stabilizer code");
    }
    auto parse = [](const std::string &text, const std::string &what) {
        try {
            return parse_pauli(text);
        } catch (const PauliParseError &e) {
            throw CodeError(what + ": " + e.what());
        }
    };
    std::vector<SignedPauli> gens;
    for (size_t k = 0; k < spec.generators.size(); k++) {
        gens.push_back(parse(spec.generators[k], "generator " + std::to_string(k)));
    }
    SignedPauli lx = parse(spec.logical_x, "logical_x");
    SignedPauli lz = parse(spec.logical_z, "logical_z");
    if (spec.n != 0 && lx.num_qubits() != spec.n) {
        throw CodeError(
            "declared n = " + std::to_string(spec.n) + " but logical_x acts on " + std::to_string(lx.num_qubits()) +
            " qubits");
    }
    return load_code_parts(spec.name, std::move(gens), lx, lz, spec.recovery);
}

const StabilizerCode &ConcatenatedCode::single() const & {
    if (layers.size() != 1) {
        throw CodeError("code \"" + name + "\" is a concatenation of " + std::to_string(layers.size()) + " codes");
    }
    return *layers[0];
}

StabilizerCode ConcatenatedCode::single() && {
    return static_cast<const ConcatenatedCode &>(*this).single();
}

const std::vector<std::string> &catalog_names() {
    static const std::vector<std::string> names{
        "bitflip", "phaseflip", "phaseflip_prime", "shor", "shor_prime", "steane", "five_bit"};
    return names;
}

bool in_catalog(const std::string &name) {
    const auto &names = catalog_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

CodeSpec catalog_spec(const std::string &name) {
    CodeSpec s;
    s.name = name;
    if (name == "bitflip") {
        s.n = 3;
        s.generators = {"+ZZI", "+IZZ"};
        s.logical_x = "+XXX";
        s.logical_z = "+ZZZ";
    } else if (name == "phaseflip") {
        s.n = 3;
        s.generators = {"+XXI", "+IXX"};
        s.logical_x = "+XXX";
        s.logical_z = "+ZZZ";
    } else if (name == "phaseflip_prime") {
        // |0> -> |+++>, |1> -> |--->: the logical X and Z roles are swapped.
        s.n = 3;
        s.generators = {"+XXI", "+IXX"};
        s.logical_x = "+ZZZ";
        s.logical_z = "+XXX";
    } else if (name == "steane") {
        s.n = 7;
        s.generators = {"+IIIXXXX", "+IXXIIXX", "+XIXIXIX", "+IIIZZZZ", "+IZZIIZZ", "+ZIZIZIZ"};
        s.logical_x = "+XXXXXXX";
        s.logical_z = "+ZZZZZZZ";
    } else if (name == "five_bit") {
        s.n = 5;
        s.generators = {"+XZZXI", "+IXZZX", "+XIXZZ", "+ZXIXZ"};
        s.logical_x = "+XXXXX";
        s.logical_z = "+ZZZZZ";
    } else if (name == "shor") {
        s.concat = {"phaseflip", "bitflip"};
    } else if (name == "shor_prime") {
        s.concat = {"phaseflip_prime", "bitflip"};
    } else {
        std::string known;
        for (const auto &k : catalog_names()) {
            known += (known.empty() ? "" : ", ") + k;
        }
        throw CodeError("unknown catalog code \"" + name + "\" (known: " + known + ")");
    }
    return s;
}

CodeSpec resolve_catalog_or_file(const std::string &name_or_path) {
    if (in_catalog(name_or_path)) {
        return catalog_spec(name_or_path);
    }
    std::ifstream in(name_or_path);
    if (!in) {
        throw CodeError("\"" + name_or_path + "\" is neither a catalog code nor a readable spec file");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_code_spec(ss.str());
    } catch (const CodeError &e) {
        throw CodeError(name_or_path + ": " + e.what());
    }
}

namespace {

void build_layers(
    const CodeSpec &spec, const SpecResolver &resolve, std::vector<std::shared_ptr<const StabilizerCode>> &out,
    size_t depth) {
    if (depth > 32) {
        throw CodeError("concatenation recipe nests more than 32 levels (cycle?)");
    }
    if (!spec.is_concatenation()) {
        out.push_back(std::make_shared<const StabilizerCode>(load_code(spec)));
        return;
    }
    for (const auto &component : spec.concat) {
        build_layers(resolve(component), resolve, out, depth + 1);
    }
}

}  // namespace

ConcatenatedCode build_code(const CodeSpec &spec, const SpecResolver &resolve) {
    ConcatenatedCode code;
    code.name = spec.name;
    build_layers(spec, resolve, code.layers, 0);
    return code;
}

ConcatenatedCode catalog_code(const std::string &name) {
    return build_code(catalog_spec(name));
}

}  // namespace qecmap

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

#include <bit>

namespace qecmap {

namespace {

uint64_t low_bits(size_t n) {
    return n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
}

void require_same_size(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError(
            "Pauli operators act on different register sizes: " + std::to_string(a.num_qubits()) + " vs " +
            std::to_string(b.num_qubits()));
    }
}

}  // namespace

char letter_char(PauliLetter p) {
    static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
    return kChars[static_cast<uint8_t>(p)];
}

PauliString::PauliString(size_t num_qubits) : n_(num_qubits) {
    if (num_qubits > kMaxQubits) {
        throw std::invalid_argument("PauliString supports at most 64 qubits");
    }
}

PauliString::PauliString(size_t num_qubits, uint64_t x_mask, uint64_t z_mask) : PauliString(num_qubits) {
    uint64_t m = low_bits(num_qubits);
    if ((x_mask & ~m) || (z_mask & ~m)) {
        throw std::invalid_argument("Pauli mask has bits beyond the register size");
    }
    x_ = x_mask;
    z_ = z_mask;
}

PauliLetter PauliString::letter(size_t q) const {
    bool x = (x_ >> q) & 1;
    bool z = (z_ >> q) & 1;
    if (x && z) {
        return PauliLetter::Y;
    }
    if (x) {
        return PauliLetter::X;
    }
    if (z) {
        return PauliLetter::Z;
    }
    return PauliLetter::I;
}

void PauliString::set_letter(size_t q, PauliLetter p) {
    uint64_t bit = uint64_t{1} << q;
    x_ &= ~bit;
    z_ &= ~bit;
    if (p == PauliLetter::X || p == PauliLetter::Y) {
        x_ |= bit;
    }
    if (p == PauliLetter::Z || p == PauliLetter::Y) {
        z_ |= bit;
    }
}

size_t PauliString::weight() const {
    return std::popcount(x_ | z_);
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(n_);
    for (size_t q = 0; q < n_; q++) {
        out.push_back(letter_char(letter(q)));
    }
    return out;
}

std::string SignedPauli::str() const {
    return (sign ? "-" : "+") + body.str();
}

SignedPauli PauliProduct::to_signed() const {
    if (!is_hermitian()) {
        throw std::domain_error("Pauli product carries a phase of +-i and is not Hermitian");
    }
    return SignedPauli{phase == 2, body};
}

PauliProduct pauli_mul(const PauliString &a, const PauliString &b) {
    require_same_size(a, b);
    // With P(x,z) = i^{x.z} X^x Z^z per qubit, moving Z^{z_a} past X^{x_b}
    // contributes (-1)^{z_a.x_b}.
    uint64_t x = a.x_mask() ^ b.x_mask();
    uint64_t z = a.z_mask() ^ b.z_mask();
    int e = std::popcount(a.x_mask() & a.z_mask()) + std::popcount(b.x_mask() & b.z_mask()) +
            2 * std::popcount(a.z_mask() & b.x_mask()) - std::popcount(x & z);
    PauliProduct out;
    out.phase = static_cast<uint8_t>(((e % 4) + 4) % 4);
    out.body = PauliString(a.num_qubits(), x, z);
    return out;
}

PauliProduct pauli_mul(const SignedPauli &a, const SignedPauli &b) {
    PauliProduct out = pauli_mul(a.body, b.body);
    out.phase = static_cast<uint8_t>((out.phase + 2 * (int(a.sign) + int(b.sign))) % 4);
    return out;
}

int eta(const PauliString &a, const PauliString &b) {
    require_same_size(a, b);
    int s = std::popcount(a.x_mask() & b.z_mask()) + std::popcount(a.z_mask() & b.x_mask());
    return (s & 1) ? -1 : +1;
}

LetterWeights weights(const PauliString &p) {
    uint64_t y = p.x_mask() & p.z_mask();
    LetterWeights w;
    w.x = std::popcount(p.x_mask() & ~y);
    w.y = std::popcount(y);
    w.z = std::popcount(p.z_mask() & ~y);
    return w;
}

SignedPauli parse_pauli(std::string_view text) {
    SignedPauli out;
    size_t start = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        out.sign = text[0] == '-';
        start = 1;
    }
    if (start == text.size()) {
        throw PauliParseError("empty Pauli body in \"" + std::string(text) + "\"", start);
    }
    size_t n = text.size() - start;
    if (n > PauliString::kMaxQubits) {
        throw PauliParseError("Pauli string longer than 64 qubits", PauliString::kMaxQubits + start);
    }
    out.body = PauliString(n);
    for (size_t i = start; i < text.size(); i++) {
        PauliLetter p;
        switch (text[i]) {
            case 'I':
                p = PauliLetter::I;
                break;
            case 'X':
                p = PauliLetter::X;
                break;
            case 'Y':
                p = PauliLetter::Y;
                break;
            case 'Z':
                p = PauliLetter::Z;
                break;
            default:
                throw PauliParseError(
                    "illegal character '" + std::string(1, text[i]) + "' at index " + std::to_string(i) +
                        " in Pauli \"" + std::string(text) + "\"",
                    i);
        }
        out.body.set_letter(i - start, p);
    }
    return out;
}

}  // namespace qecmap

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

#ifndef QECMAP_PAULI_H
#define QECMAP_PAULI_H

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qecmap {

/// Single-qubit Pauli letter. The numeric value doubles as the row/column
/// index into a Pauli-transfer matrix (I, X, Y, Z order).
enum class PauliLetter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(PauliLetter p);

/// Thrown when two Pauli operators on different register sizes are combined.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown by parse_pauli. `position` is the offending character index in the
/// input text (sign included).
struct PauliParseError : std::invalid_argument {
    PauliParseError(const std::string &msg, size_t position)
        : std::invalid_argument(msg), position(position) {
    }
    size_t position;
};

/// Unsigned n-qubit Pauli string in symplectic form. Qubit 0 is the leftmost
/// letter of the text form and bit 0 of both masks.
class PauliString {
   public:
    static constexpr size_t kMaxQubits = 64;

    PauliString() = default;
    explicit PauliString(size_t num_qubits);
    PauliString(size_t num_qubits, uint64_t x_mask, uint64_t z_mask);

    size_t num_qubits() const {
        return n_;
    }
    uint64_t x_mask() const {
        return x_;
    }
    uint64_t z_mask() const {
        return z_;
    }

    PauliLetter letter(size_t q) const;
    void set_letter(size_t q, PauliLetter p);

    size_t weight() const;
    bool is_identity() const {
        return (x_ | z_) == 0;
    }

    std::string str() const;

    bool operator==(const PauliString &other) const = default;
    auto operator<=>(const PauliString &other) const = default;

   private:
    size_t n_ = 0;
    uint64_t x_ = 0;
    uint64_t z_ = 0;
};

/// Hermitian Pauli operator (-1)^sign * body.
struct SignedPauli {
    bool sign = false;
    PauliString body;

    size_t num_qubits() const {
        return body.num_qubits();
    }
    std::string str() const;

    bool operator==(const SignedPauli &other) const = default;
};

/// Product of two Pauli operators as i^phase * body.
/// `phase` is an exponent of i modulo 4: 0 -> +1, 1 -> +i, 2 -> -1, 3 -> -i.
struct PauliProduct {
    uint8_t phase = 0;
    PauliString body;

    bool is_hermitian() const {
        return (phase & 1) == 0;
    }
    /// Converts to a SignedPauli. Throws std::domain_error when the phase is +-i.
    SignedPauli to_signed() const;

    bool operator==(const PauliProduct &other) const = default;
};

PauliProduct pauli_mul(const SignedPauli &a, const SignedPauli &b);
PauliProduct pauli_mul(const PauliString &a, const PauliString &b);

/// +1 when a and b commute, -1 when they anticommute.
int eta(const PauliString &a, const PauliString &b);
inline int eta(const SignedPauli &a, const SignedPauli &b) {
    return eta(a.body, b.body);
}

struct LetterWeights {
    size_t x = 0;
    size_t y = 0;
    size_t z = 0;

    size_t total() const {
        return x + y + z;
    }
    bool operator==(const LetterWeights &other) const = default;
};

LetterWeights weights(const PauliString &p);

/// Parses "[+|-]LETTERS" with letters from {I,X,Y,Z}.
SignedPauli parse_pauli(std::string_view text);

}  // namespace qecmap

#endif

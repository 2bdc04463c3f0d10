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

#include "qecmap/correctable.h"

#include <map>

namespace qecmap {

namespace {

constexpr size_t kMaxEnumeratedQubits = 10;

Polynomial1 power(const Polynomial1 &p, size_t k) {
    Polynomial1 r({1.0});
    for (size_t i = 0; i < k; i++) {
        r = r * p;
    }
    return r;
}

}  // namespace

PauliDistribution depolarizing_distribution() {
    const double third = 1.0 / 3.0;
    return {Polynomial1({1.0, -1.0}), Polynomial1({0.0, third}), Polynomial1({0.0, third}), Polynomial1({0.0, third})};
}

PauliDistribution logical_error_distribution(const StabilizerCode &code, const PauliDistribution &physical) {
    const size_t n = code.n();
    if (n > kMaxEnumeratedQubits) {
        throw std::domain_error(
            "error enumeration for " + code.name() + " would visit 4^" + std::to_string(n) + " errors (limit is 4^" +
            std::to_string(kMaxEnumeratedQubits) + ")");
    }
    const PauliString &lx = code.logical_x().body;
    const PauliString &lz = code.logical_z().body;

    // Errors with the same letter counts share a probability; tally them per logical class.
    std::map<std::array<size_t, 4>, std::array<uint64_t, 4>> tally;
    const uint64_t total = uint64_t{1} << (2 * n);
    for (uint64_t e = 0; e < total; e++) {
        uint64_t x = e & ((uint64_t{1} << n) - 1);
        uint64_t z = e >> n;
        PauliString err(n, x, z);
        Syndrome s = syndrome_of(err, code.generators());
        PauliString residual = pauli_mul(code.recovery()[s].body, err).body;
        bool flips_z = eta(residual, lz) < 0;
        bool flips_x = eta(residual, lx) < 0;
        size_t logical = flips_z ? (flips_x ? 2 : 1) : (flips_x ? 3 : 0);
        LetterWeights w = weights(err);
        std::array<size_t, 4> counts{n - w.total(), w.x, w.y, w.z};
        tally[counts][logical]++;
    }

    PauliDistribution out{Polynomial1({0.0}), Polynomial1({0.0}), Polynomial1({0.0}), Polynomial1({0.0})};
    for (const auto &[counts, per_logical] : tally) {
        Polynomial1 prob({1.0});
        for (size_t l = 0; l < 4; l++) {
            prob = prob * power(physical[l], counts[l]);
        }
        for (size_t l = 0; l < 4; l++) {
            if (per_logical[l]) {
                out[l] = out[l] + prob * Polynomial1({static_cast<double>(per_logical[l])});
            }
        }
    }
    return out;
}

Polynomial1 correctable_probability(const ConcatenatedCode &code) {
    PauliDistribution d = depolarizing_distribution();
    for (auto it = code.layers.rbegin(); it != code.layers.rend(); ++it) {
        d = logical_error_distribution(**it, d);
    }
    return d[0];
}

}  // namespace qecmap

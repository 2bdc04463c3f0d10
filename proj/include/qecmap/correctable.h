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

#ifndef QECMAP_CORRECTABLE_H
#define QECMAP_CORRECTABLE_H

#include <array>

#include "qecmap/dynamics.h"
#include "qecmap/stabilizer_code.h"

namespace qecmap {

/// Probabilities of I, X, Y, Z as polynomials in the physical error rate p.
using PauliDistribution = std::array<Polynomial1, 4>;

/// p -> (1 - p, p/3, p/3, p/3).
PauliDistribution depolarizing_distribution();

/// Logical Pauli distribution after syndrome decoding, given i.i.d. physical
/// Pauli errors with distribution `physical`. Enumerates all 4^n errors, so
/// only small codes are accepted.
PauliDistribution logical_error_distribution(const StabilizerCode &code, const PauliDistribution &physical);

/// Probability, as a polynomial in p, that depolarizing noise of strength p
/// on every physical qubit is decoded back to the identity. Concatenated
/// codes are decoded block by block, innermost first.
Polynomial1 correctable_probability(const ConcatenatedCode &code);

}  // namespace qecmap

#endif

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

#ifndef QECMAP_ORACLE_H
#define QECMAP_ORACLE_H

#include <Eigen/Dense>
#include <array>
#include <stdexcept>
#include <vector>

#include "qecmap/channel.h"
#include "qecmap/stabilizer_code.h"

namespace qecmap {

/// Dense brute-force reference for small codes. Everything here works on
/// explicit 2^n x 2^n matrices; qubit 0 is the most significant bit of the
/// basis index, matching the leftmost letter of a Pauli string.

inline constexpr size_t kMaxOracleQubits = 5;

using DenseOperator = Eigen::MatrixXcd;
using DenseState = Eigen::VectorXcd;
using Kraus1 = Eigen::Matrix2cd;
using KrausSet = std::vector<Kraus1>;

/// The code is too large for dense treatment.
struct OracleSizeError : std::length_error {
    using std::length_error::length_error;
};

/// sqrt(p_s) * s for each Pauli s with nonzero probability (identity first).
/// Throws CpViolation for nonphysical channels.
KrausSet kraus_from_diagonal(const DiagonalChannel &c);

/// max-abs entry of sum_m K_m^dagger K_m - I.
double kraus_completeness_error(const KrausSet &k);

DenseOperator dense_pauli(const SignedPauli &p);

/// Explicit codewords, syndrome projectors and recovery operators.
struct DenseCode {
    size_t n = 0;
    DenseState zero;  // |0-bar>, first nonzero amplitude real positive
    DenseState one;   // X-bar |0-bar>
    DenseOperator codespace_projector;
    /// Indexed by syndrome.
    std::vector<DenseOperator> syndrome_projectors;
    std::vector<DenseOperator> recoveries;
};

DenseCode build_dense_code(const StabilizerCode &code);

/// E_I, E_X, E_Y, E_Z from the codewords.
std::array<DenseOperator, 4> dense_encoding_ops(const DenseCode &dc);
/// D_sigma = 2 sum_j (R_j P_j)^dagger E_sigma (R_j P_j).
std::array<DenseOperator, 4> dense_decoding_ops(const DenseCode &dc, const std::array<DenseOperator, 4> &e);

/// The same single-qubit Kraus set acting on every qubit.
DenseOperator apply_product_noise(const DenseOperator &rho, const KrausSet &k, size_t n);

/// G[s][t] = Re tr(D_s N[E_t]).
QubitChannel dense_effective_channel(const StabilizerCode &code, const KrausSet &k);

/// sum_j (R_j P_j)^dagger B B^dagger (R_j P_j), which must equal the identity.
DenseOperator decoding_completeness(const DenseCode &dc);

}  // namespace qecmap

#endif

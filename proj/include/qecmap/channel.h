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

#ifndef QECMAP_CHANNEL_H
#define QECMAP_CHANNEL_H

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace qecmap {

/// Tolerance used when checking the complete-positivity inequalities.
inline constexpr double kCpTolerance = 1e-12;

/// Raised when a channel fails complete positivity (or, equivalently, when its
/// Pauli-error probabilities leave the simplex).
struct CpViolation : std::domain_error {
    using std::domain_error::domain_error;
};

/// Expectation-value vector (<I>, <X>, <Y>, <Z>).
using BlochVector4 = std::array<double, 4>;

/// Single-qubit channel as a 4x4 Pauli-transfer matrix acting on
/// (<I>,<X>,<Y>,<Z>): out[s] = sum_t m[s][t] * in[t].
class QubitChannel {
   public:
    using Matrix = std::array<std::array<double, 4>, 4>;

    /// Identity channel.
    QubitChannel();
    /// Throws std::invalid_argument unless row I is exactly (1,0,0,0).
    explicit QubitChannel(const Matrix &m);

    static QubitChannel diagonal(double x, double y, double z);

    const Matrix &matrix() const {
        return m_;
    }
    double operator()(size_t row, size_t col) const {
        return m_[row][col];
    }

    /// Largest |entry| off the diagonal.
    double max_off_diagonal() const;

    bool operator==(const QubitChannel &other) const = default;

   private:
    Matrix m_;
};

/// Diagonal channel [x, y, z], i.e. transfer matrix diag(1, x, y, z).
struct DiagonalChannel {
    double x = 1;
    double y = 1;
    double z = 1;

    /// Index 0,1,2 -> x,y,z.
    double operator[](size_t axis) const {
        return axis == 0 ? x : (axis == 1 ? y : z);
    }
    QubitChannel to_matrix() const {
        return QubitChannel::diagonal(x, y, z);
    }
    std::string str() const;

    bool operator==(const DiagonalChannel &other) const = default;
};

struct PauliProbs {
    double p_x = 0;
    double p_y = 0;
    double p_z = 0;

    double p_identity() const {
        return 1 - p_x - p_y - p_z;
    }
    bool operator==(const PauliProbs &other) const = default;
};

/// Returns the first violated CP inequality as text (e.g. "x+y-z = 3 > 1"),
/// or nothing if [x,y,z] is completely positive.
std::optional<std::string> cp_violation(const DiagonalChannel &c, double tolerance = kCpTolerance);
inline bool is_physical(const DiagonalChannel &c, double tolerance = kCpTolerance) {
    return !cp_violation(c, tolerance).has_value();
}

DiagonalChannel make_diagonal(double x, double y, double z, bool require_physical);

/// p_X = (1+x-y-z)/4 etc. Throws CpViolation when c is not physical.
PauliProbs diagonal_to_pauli_probs(const DiagonalChannel &c);
/// x = 1-2(p_Y+p_Z) etc. Throws CpViolation when p is outside the simplex.
DiagonalChannel pauli_probs_to_diagonal(const PauliProbs &p);

/// Symmetric depolarizing channel after time t (gamma = 1): [e^-t, e^-t, e^-t].
DiagonalChannel depolarizing(double gamma_t);

/// Symmetric Pauli channel with p_X = p_Y = p_Z = p/3.
DiagonalChannel symmetric_pauli(double p);

double worst_case_fidelity(const DiagonalChannel &c);
/// Fidelity of the pure state with Bloch vector (bx, by, bz), |b| = 1.
double pure_state_fidelity(const DiagonalChannel &c, double bx, double by, double bz);

BlochVector4 apply_channel(const QubitChannel &c, const BlochVector4 &v);

}  // namespace qecmap

#endif

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

#include "qecmap/channel.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qecmap {

namespace {

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

}  // namespace

QubitChannel::QubitChannel() : m_{} {
    for (size_t i = 0; i < 4; i++) {
        m_[i][i] = 1;
    }
}

QubitChannel::QubitChannel(const Matrix &m) : m_(m) {
    if (m[0][0] != 1 || m[0][1] != 0 || m[0][2] != 0 || m[0][3] != 0) {
        throw std::invalid_argument("channel is not trace preserving: first row must be exactly 1,0,0,0");
    }
}

QubitChannel QubitChannel::diagonal(double x, double y, double z) {
    Matrix m{};
    m[0][0] = 1;
    m[1][1] = x;
    m[2][2] = y;
    m[3][3] = z;
    return QubitChannel(m);
}

double QubitChannel::max_off_diagonal() const {
    double worst = 0;
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            if (i != j) {
                worst = std::max(worst, std::abs(m_[i][j]));
            }
        }
    }
    return worst;
}

std::string DiagonalChannel::str() const {
    return "[" + fmt(x) + ", " + fmt(y) + ", " + fmt(z) + "]";
}

std::optional<std::string> cp_violation(const DiagonalChannel &c, double tolerance) {
    struct Ineq {
        const char *label;
        double value;
    };
    const Ineq checks[] = {
        {"-x+y+z", -c.x + c.y + c.z},
        {"x-y+z", c.x - c.y + c.z},
        {"x+y-z", c.x + c.y - c.z},
        {"-x-y-z", -c.x - c.y - c.z},
    };
    for (const auto &q : checks) {
        if (q.value > 1 + tolerance) {
            return std::string(q.label) + " = " + fmt(q.value) + " > 1";
        }
    }
    return std::nullopt;
}

DiagonalChannel make_diagonal(double x, double y, double z, bool require_physical) {
    DiagonalChannel c{x, y, z};
    if (require_physical) {
        if (auto v = cp_violation(c)) {
            throw CpViolation("channel " + c.str() + " is not completely positive: " + *v);
        }
    }
    return c;
}

PauliProbs diagonal_to_pauli_probs(const DiagonalChannel &c) {
    if (auto v = cp_violation(c)) {
        throw CpViolation(
            "channel " + c.str() + " has Pauli probabilities outside [0,1] (not completely positive: " + *v + ")");
    }
    return PauliProbs{
        (1 + c.x - c.y - c.z) / 4,
        (1 - c.x + c.y - c.z) / 4,
        (1 - c.x - c.y + c.z) / 4,
    };
}

DiagonalChannel pauli_probs_to_diagonal(const PauliProbs &p) {
    const double tol = kCpTolerance;
    if (p.p_x < -tol || p.p_y < -tol || p.p_z < -tol || p.p_x + p.p_y + p.p_z > 1 + tol) {
        throw CpViolation(
            "Pauli probabilities (" + fmt(p.p_x) + ", " + fmt(p.p_y) + ", " + fmt(p.p_z) +
            ") are outside the probability simplex");
    }
    return DiagonalChannel{
        1 - 2 * (p.p_y + p.p_z),
        1 - 2 * (p.p_x + p.p_z),
        1 - 2 * (p.p_x + p.p_y),
    };
}

DiagonalChannel depolarizing(double gamma_t) {
    if (!(gamma_t >= 0)) {
        throw std::domain_error("depolarizing time gamma*t must be >= 0");
    }
    double v = std::exp(-gamma_t);
    return DiagonalChannel{v, v, v};
}

DiagonalChannel symmetric_pauli(double p) {
    return pauli_probs_to_diagonal(PauliProbs{p / 3, p / 3, p / 3});
}

double worst_case_fidelity(const DiagonalChannel &c) {
    return (1 + std::min({c.x, c.y, c.z})) / 2;
}

double pure_state_fidelity(const DiagonalChannel &c, double bx, double by, double bz) {
    return (1 + c.x * bx * bx + c.y * by * by + c.z * bz * bz) / 2;
}

BlochVector4 apply_channel(const QubitChannel &c, const BlochVector4 &v) {
    BlochVector4 out{};
    for (size_t s = 0; s < 4; s++) {
        double acc = 0;
        for (size_t t = 0; t < 4; t++) {
            acc += c(s, t) * v[t];
        }
        out[s] = acc;
    }
    return out;
}

}  // namespace qecmap

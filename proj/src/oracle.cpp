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

#include "qecmap/oracle.h"

#include <cmath>
#include <complex>

namespace qecmap {

namespace {

using cd = std::complex<double>;

constexpr double kAmplitudeFloor = 1e-12;
constexpr double kTraceRowTolerance = 1e-10;

Kraus1 single_pauli(PauliLetter p) {
    Kraus1 m;
    switch (p) {
        case PauliLetter::I:
            m << 1, 0, 0, 1;
            break;
        case PauliLetter::X:
            m << 0, 1, 1, 0;
            break;
        case PauliLetter::Y:
            m << 0, cd(0, -1), cd(0, 1), 0;
            break;
        case PauliLetter::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
    DenseOperator r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return r;
}

// K acting on qubit q of an n-qubit register.
DenseOperator embed(const Kraus1 &k, size_t q, size_t n) {
    DenseOperator r = DenseOperator::Identity(1, 1);
    for (size_t i = 0; i < n; i++) {
        r = kron(r, i == q ? DenseOperator(k) : DenseOperator(DenseOperator::Identity(2, 2)));
    }
    return r;
}

void check_size(const StabilizerCode &code) {
    if (code.n() > kMaxOracleQubits) {
        throw OracleSizeError(
            "dense oracle refuses code " + code.name() + " with " + std::to_string(code.n()) +
            " qubits (limit is " + std::to_string(kMaxOracleQubits) + ")");
    }
}

}  // namespace

KrausSet kraus_from_diagonal(const DiagonalChannel &c) {
    if (auto v = cp_violation(c)) {
        throw CpViolation("channel " + c.str() + " is not completely positive: " + *v);
    }
    PauliProbs p = diagonal_to_pauli_probs(c);
    const double probs[4] = {p.p_identity(), p.p_x, p.p_y, p.p_z};
    KrausSet out;
    for (size_t s = 0; s < 4; s++) {
        double q = std::max(probs[s], 0.0);
        if (q > 0) {
            out.push_back(std::sqrt(q) * single_pauli(static_cast<PauliLetter>(s)));
        }
    }
    return out;
}

double kraus_completeness_error(const KrausSet &k) {
    Kraus1 acc = Kraus1::Zero();
    for (const Kraus1 &m : k) {
        acc += m.adjoint() * m;
    }
    return (acc - Kraus1::Identity()).cwiseAbs().maxCoeff();
}

DenseOperator dense_pauli(const SignedPauli &p) {
    DenseOperator r = DenseOperator::Identity(1, 1);
    for (size_t i = 0; i < p.body.num_qubits(); i++) {
        r = kron(r, DenseOperator(single_pauli(p.body.letter(i))));
    }
    return p.sign ? DenseOperator(-r) : r;
}

DenseCode build_dense_code(const StabilizerCode &code) {
    check_size(code);
    const size_t n = code.n();
    const Eigen::Index dim = Eigen::Index{1} << n;
    const DenseOperator id = DenseOperator::Identity(dim, dim);

    DenseCode dc;
    dc.n = n;
    dc.codespace_projector = id;
    std::vector<DenseOperator> gens;
    for (const SignedPauli &g : code.generators()) {
        gens.push_back(dense_pauli(g));
        dc.codespace_projector = dc.codespace_projector * (id + gens.back()) * 0.5;
    }

    DenseOperator p0 = dc.codespace_projector * (id + dense_pauli(code.logical_z())) * 0.5;
    Eigen::Index best = 0;
    p0.colwise().norm().maxCoeff(&best);
    DenseState v = p0.col(best);
    v.normalize();
    for (Eigen::Index i = 0; i < dim; i++) {
        if (std::abs(v(i)) > kAmplitudeFloor) {
            v *= std::conj(v(i)) / std::abs(v(i));
            break;
        }
    }
    dc.zero = v;
    dc.one = dense_pauli(code.logical_x()) * v;

    const size_t num_syndromes = size_t{1} << gens.size();
    for (Syndrome s = 0; s < num_syndromes; s++) {
        DenseOperator proj = id;
        for (size_t k = 0; k < gens.size(); k++) {
            double sign = (s >> k) & 1 ? -1.0 : 1.0;
            proj = proj * (id + sign * gens[k]) * 0.5;
        }
        dc.syndrome_projectors.push_back(proj);
        dc.recoveries.push_back(dense_pauli(code.recovery()[s]));
    }
    return dc;
}

std::array<DenseOperator, 4> dense_encoding_ops(const DenseCode &dc) {
    const cd i(0, 1);
    DenseOperator z0 = dc.zero * dc.zero.adjoint();
    DenseOperator z1 = dc.one * dc.one.adjoint();
    DenseOperator o01 = dc.zero * dc.one.adjoint();
    DenseOperator o10 = dc.one * dc.zero.adjoint();
    return {
        DenseOperator(0.5 * (z0 + z1)),
        DenseOperator(0.5 * (o01 + o10)),
        DenseOperator(0.5 * (-i * o01 + i * o10)),
        DenseOperator(0.5 * (z0 - z1)),
    };
}

std::array<DenseOperator, 4> dense_decoding_ops(const DenseCode &dc, const std::array<DenseOperator, 4> &e) {
    std::array<DenseOperator, 4> d;
    const Eigen::Index dim = dc.zero.size();
    for (size_t s = 0; s < 4; s++) {
        d[s] = DenseOperator::Zero(dim, dim);
    }
    for (size_t j = 0; j < dc.recoveries.size(); j++) {
        DenseOperator a = dc.recoveries[j] * dc.syndrome_projectors[j];
        DenseOperator a_dag = a.adjoint();
        for (size_t s = 0; s < 4; s++) {
            d[s] += 2.0 * a_dag * e[s] * a;
        }
    }
    return d;
}

DenseOperator apply_product_noise(const DenseOperator &rho, const KrausSet &k, size_t n) {
    DenseOperator cur = rho;
    for (size_t q = 0; q < n; q++) {
        DenseOperator next = DenseOperator::Zero(rho.rows(), rho.cols());
        for (const Kraus1 &m : k) {
            DenseOperator big = embed(m, q, n);
            next += big * cur * big.adjoint();
        }
        cur = std::move(next);
    }
    return cur;
}

QubitChannel dense_effective_channel(const StabilizerCode &code, const KrausSet &k) {
    DenseCode dc = build_dense_code(code);
    auto e = dense_encoding_ops(dc);
    auto d = dense_decoding_ops(dc, e);
    QubitChannel::Matrix g{};
    for (size_t t = 0; t < 4; t++) {
        DenseOperator noisy = apply_product_noise(e[t], k, dc.n);
        for (size_t s = 0; s < 4; s++) {
            g[s][t] = (d[s] * noisy).trace().real();
        }
    }
    for (size_t t = 0; t < 4; t++) {
        double expect = t == 0 ? 1.0 : 0.0;
        if (std::abs(g[0][t] - expect) > kTraceRowTolerance) {
            throw std::logic_error("dense effective channel is not trace preserving");
        }
        g[0][t] = expect;
    }
    return QubitChannel(g);
}

DenseOperator decoding_completeness(const DenseCode &dc) {
    const Eigen::Index dim = dc.zero.size();
    DenseOperator bb = dc.zero * dc.zero.adjoint() + dc.one * dc.one.adjoint();
    DenseOperator acc = DenseOperator::Zero(dim, dim);
    for (size_t j = 0; j < dc.recoveries.size(); j++) {
        DenseOperator a = dc.recoveries[j] * dc.syndrome_projectors[j];
        acc += a.adjoint() * bb * a;
    }
    return acc;
}

}  // namespace qecmap

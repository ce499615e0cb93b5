// Copyright 2026 The Blindgate Authors
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


#include "blindgate/separable.h"

#include <cmath>
#include <numbers>

#include "blindgate/errors.h"
#include "blindgate/gf2.h"
#include "blindgate/subspaces.h"

namespace blindgate {

namespace {

constexpr double kTol = 1e-9;

Complex expectation(const Vector &psi, const PauliString &p) {
    return psi.dot(dense_matrix(p) * psi);
}

Matrix normalized_phase(const Matrix &u) {
    Eigen::Index bi = 0, bj = 0;
    u.cwiseAbs().maxCoeff(&bi, &bj);
    const Complex top = u(bi, bj);
    return std::abs(top) == 0.0 ? u : Matrix(u * (std::abs(top) / top));
}

bool proportional_to_pauli(const Matrix &u) {
    return pauli_from_dense(normalized_phase(u), kTol).has_value();
}

// Columns are the two eigenvectors (+1 first) of the given single-qubit Pauli.
Matrix eigenbasis(char letter) {
    const double r = 1.0 / std::numbers::sqrt2;
    Matrix e(2, 2);
    switch (letter) {
    case 'X':
        e << r, r, r, -r;
        break;
    case 'Y':
        e << r, r, Complex(0.0, r), Complex(0.0, -r);
        break;
    default:
        e << 1, 0, 0, 1;
        break;
    }
    return e;
}

}  // namespace

StabilizerGroup::StabilizerGroup(size_t m, std::vector<PauliString> generators)
    : m_(m), generators_(std::move(generators)) {
    std::vector<uint64_t> rows;
    for (const PauliString &g : generators_) {
        if (g.num_qubits() != m_) {
            throw DimensionError("stabilizer generator has the wrong width");
        }
        if (!g.is_hermitian() || g.is_identity_up_to_phase()) {
            throw ValidationError("stabilizer generators must be non-identity Hermitian Paulis");
        }
        rows.push_back(g.row());
    }
    for (size_t i = 0; i < generators_.size(); i++) {
        for (size_t j = 0; j < i; j++) {
            if (commutator(generators_[i], generators_[j])) {
                throw ValidationError("stabilizer generators must commute");
            }
        }
    }
    if (rank(Gf2Matrix::from_rows(rows, 2 * m_)) != rows.size()) {
        throw ValidationError("stabilizer generators must be independent");
    }
}

std::vector<PauliString> StabilizerGroup::elements() const {
    std::vector<PauliString> out;
    const uint64_t count = uint64_t{1} << generators_.size();
    for (uint64_t mask = 0; mask < count; mask++) {
        PauliString p(m_);
        for (size_t i = 0; i < generators_.size(); i++) {
            if ((mask >> i) & 1) {
                p = p * generators_[i];
            }
        }
        out.push_back(p);
    }
    return out;
}

std::string StabilizerGroup::str() const {
    std::string out = "<";
    for (size_t i = 0; i < generators_.size(); i++) {
        out += (i ? ", " : "") + generators_[i].str();
    }
    return out + ">";
}

StabilizerGroup stabilizers_of_phi(const Matrix &u_cl, const BasisB &b, const StandardTransform &st,
                                   bool conjugated) {
    const size_t m = b.size();
    if (m == 0 || m > 6) {
        throw ResourceError("stabilizer extraction supports 1 to 6 qubits");
    }
    (void)CliffordTableau::from_dense(u_cl);
    const Vector phi = phi_state(u_cl, b, st, conjugated).amplitudes;

    std::vector<uint64_t> rows;
    for (uint64_t row = 1; row < (uint64_t{1} << (2 * m)); row++) {
        if (std::abs(expectation(phi, PauliString::from_row(m, row))) > 1.0 - kTol) {
            rows.push_back(row);
        }
    }
    const PauliSubspace group(m, Gf2Matrix::from_rows(rows, 2 * m));
    if (group.dim() != m) {
        throw InvariantViolation("phi is not a stabilizer state");
    }
    std::vector<PauliString> generators;
    for (const PauliString &g : group.generator_paulis()) {
        const double sign = expectation(phi, g).real();
        generators.push_back(g.with_phase(sign > 0 ? 0 : 2));
    }
    return StabilizerGroup(m, std::move(generators));
}

bool shares_stabilizer(const StabilizerGroup &g, const StabilizerGroup &h) {
    if (g.num_qubits() != h.num_qubits()) {
        throw DimensionError("stabilizer groups have different widths");
    }
    const std::vector<PauliString> theirs = h.elements();
    for (const PauliString &p : g.elements()) {
        if (p.is_identity_up_to_phase()) {
            continue;
        }
        for (const PauliString &q : theirs) {
            if (p == q) {
                return true;
            }
        }
    }
    return false;
}

size_t unsigned_intersection_dim(const StabilizerGroup &g, const StabilizerGroup &h) {
    if (g.num_qubits() != h.num_qubits()) {
        throw DimensionError("stabilizer groups have different widths");
    }
    std::vector<uint64_t> both;
    for (const PauliString &p : g.generators()) {
        both.push_back(p.row());
    }
    for (const PauliString &p : h.generators()) {
        both.push_back(p.row());
    }
    return g.size() + h.size() - rank(Gf2Matrix::from_rows(both, 2 * g.num_qubits()));
}

CliffordTableau separable_v(const StabilizerGroup &g, const StabilizerGroup &h) {
    const size_t m = g.num_qubits();
    if (h.num_qubits() != m || g.size() != m || h.size() != m) {
        throw DimensionError("separable_v needs two full stabilizer groups of equal width");
    }
    if (shares_stabilizer(g, h)) {
        throw ValidationError("stabilizer groups share an element");
    }
    Gf2Matrix pairing(m, m);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            pairing.set(i, j, commutator(g.generators()[j], h.generators()[i]));
        }
    }
    const std::optional<Gf2Matrix> inv = inverse(pairing);
    if (!inv) {
        throw InvariantViolation("commutation matrix between the stabilizer groups is singular");
    }
    std::vector<PauliString> h_hat;
    for (size_t i = 0; i < m; i++) {
        PauliString p(m);
        for (size_t k = 0; k < m; k++) {
            if (inv->get(i, k)) {
                p = p * h.generators()[k];
            }
        }
        h_hat.push_back(p);
    }
    CliffordTableau v(h_hat, g.generators());
    if (m <= 6) {
        const Matrix dense = v.to_dense();
        for (size_t i = 0; i < m; i++) {
            const Matrix z = dense.adjoint() * dense_matrix(g.generators()[i]) * dense;
            const Matrix x = dense.adjoint() * dense_matrix(h_hat[i]) * dense;
            if (max_abs(Matrix(z - dense_matrix(PauliString::single(m, i, 'Z')))) > 1e-10 ||
                max_abs(Matrix(x - dense_matrix(PauliString::single(m, i, 'X')))) > 1e-10) {
                throw InvariantViolation("separable V fails its conjugation check");
            }
        }
    }
    return v;
}

Matrix separable_measurement_v(const ProtocolContext &ctx, const Matrix &u_cl) {
    const Matrix identity = gates::identity(ctx.n());
    const StabilizerGroup g = stabilizers_of_phi(identity, ctx.b, ctx.st, true);
    const StabilizerGroup h = stabilizers_of_phi(u_cl, ctx.b, ctx.st, true);
    return separable_v(g, h).inverse().to_dense();
}

std::vector<std::pair<std::string, Matrix>> phase_gate_catalog(size_t n) {
    if (n == 0 || n > 4) {
        throw ResourceError("gate catalog supports 1 to 4 qubits");
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            pairs.emplace_back(i, j);
        }
    }
    std::vector<std::pair<std::string, Matrix>> out;
    for (uint64_t cz_mask = 0; cz_mask < (uint64_t{1} << pairs.size()); cz_mask++) {
        for (uint64_t s_mask = 0; s_mask < (uint64_t{1} << n); s_mask++) {
            std::string name;
            Matrix u = gates::identity(n);
            for (size_t k = 0; k < pairs.size(); k++) {
                if ((cz_mask >> k) & 1) {
                    const std::vector<size_t> t{pairs[k].first, pairs[k].second};
                    u = embed(gates::cz(), t, n) * u;
                    name += (name.empty() ? "" : "*") + std::string("cZ_") + std::to_string(t[0] + 1) +
                            std::to_string(t[1] + 1);
                }
            }
            for (size_t i = 0; i < n; i++) {
                if ((s_mask >> i) & 1) {
                    const std::vector<size_t> t{i};
                    u = embed(gates::s(), t, n) * u;
                    name += (name.empty() ? "" : "*") + std::string("S_") + std::to_string(i + 1);
                }
            }
            out.emplace_back(name.empty() ? "I" : name, u);
        }
    }
    return out;
}

std::optional<std::string> catalog_name(const Matrix &u) {
    size_t n = 0;
    while ((Eigen::Index{1} << n) < u.rows()) {
        n++;
    }
    for (const auto &[name, c] : phase_gate_catalog(n)) {
        if (proportional_to_pauli(u * c.adjoint())) {
            return name;
        }
    }
    return std::nullopt;
}

std::vector<FreeGate> enumerate_free_gates(const ProtocolContext &ctx, const Matrix &v) {
    const size_t m = ctx.m();
    if (m == 0 || m > 4) {
        throw ResourceError("enumeration supports 1 to 4 communicated qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << m;
    if (v.rows() != dim || v.cols() != dim) {
        throw DimensionError("V has the wrong dimension");
    }
    std::vector<Matrix> b_elements;
    for (uint64_t x = 0; x < ctx.b.num_elements(); x++) {
        b_elements.push_back(ctx.b.dense_element(x));
    }
    const Eigen::Index bob_dim = b_elements.front().rows();

    std::vector<FreeGate> found;
    size_t tuples = 1;
    for (size_t i = 0; i < m; i++) {
        tuples *= 3;
    }
    for (size_t t = 0; t < tuples; t++) {
        std::string bases(m, 'X');
        size_t rest = t;
        for (size_t i = m; i-- > 0;) {
            bases[i] = "XYZ"[rest % 3];
            rest /= 3;
        }
        Matrix e = gates::identity(0);
        for (char c : bases) {
            e = kron(e, eigenbasis(c));
        }
        const Matrix amplitudes = e.adjoint() * v;

        std::vector<Matrix> branches;
        bool ok = true;
        for (Eigen::Index b = 0; b < dim && ok; b++) {
            Matrix k = Matrix::Zero(bob_dim, bob_dim);
            for (Eigen::Index x = 0; x < dim; x++) {
                k += amplitudes(b, x) * b_elements[static_cast<size_t>(x)];
            }
            const Matrix kk = k * k.adjoint();
            const double scale = kk.trace().real() / static_cast<double>(bob_dim);
            if (scale < kTol ||
                max_abs(Matrix(kk - scale * Matrix::Identity(bob_dim, bob_dim))) > kTol * std::max(1.0, scale)) {
                ok = false;
                break;
            }
            branches.push_back(k / std::sqrt(scale));
            if (b > 0 && !proportional_to_pauli(branches.back() * branches.front().adjoint())) {
                ok = false;
            }
        }
        if (!ok) {
            continue;
        }
        FreeGate gate;
        gate.bases = bases;
        gate.unitary = normalized_phase(branches.front());
        if (const auto name = catalog_name(gate.unitary)) {
            gate.name = *name;
            gate.cataloged = true;
        } else {
            try {
                gate.name = CliffordTableau::from_dense(gate.unitary).str();
            } catch (const NotCliffordError &) {
                gate.name = "non-Clifford";
            }
        }
        found.push_back(std::move(gate));
    }
    return found;
}

}  // namespace blindgate

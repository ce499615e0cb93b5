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

#include "blindgate/tableau.h"

#include <cmath>
#include <utility>

#include "blindgate/errors.h"

namespace blindgate {

CliffordTableau::CliffordTableau(std::vector<PauliString> x_images, std::vector<PauliString> z_images)
    : x_images_(std::move(x_images)), z_images_(std::move(z_images)) {
    const size_t n = x_images_.size();
    if (z_images_.size() != n) {
        throw DimensionError("tableau needs one X and one Z image per qubit");
    }
    for (size_t q = 0; q < n; q++) {
        for (const auto *img : {&x_images_[q], &z_images_[q]}) {
            if (img->num_qubits() != n) {
                throw DimensionError("tableau image width mismatch");
            }
            if (!img->is_hermitian()) {
                throw ValidationError("tableau images must be Hermitian");
            }
        }
    }
    if (!is_symplectic()) {
        throw ValidationError("tableau images violate the commutation relations");
    }
}

CliffordTableau CliffordTableau::identity(size_t n) {
    std::vector<PauliString> xs, zs;
    for (size_t q = 0; q < n; q++) {
        xs.push_back(PauliString::single(n, q, 'X'));
        zs.push_back(PauliString::single(n, q, 'Z'));
    }
    return CliffordTableau(std::move(xs), std::move(zs));
}

CliffordTableau CliffordTableau::from_dense(const Matrix &u) {
    if (!is_unitary(u, 1e-9)) {
        throw ValidationError("from_dense needs a unitary");
    }
    const auto dim = static_cast<uint64_t>(u.rows());
    if (!std::has_single_bit(dim) || u.cols() != u.rows()) {
        throw DimensionError("from_dense needs a 2^n square matrix");
    }
    const size_t n = std::countr_zero(dim);
    if (n > kMaxDenseQubits) {
        throw ResourceError("dense Clifford synthesis limited to 10 qubits");
    }
    std::vector<PauliString> xs, zs;
    const Matrix ud = u.adjoint();
    for (size_t q = 0; q < n; q++) {
        for (char kind : {'X', 'Z'}) {
            const auto img = pauli_from_dense(u * dense_matrix(PauliString::single(n, q, kind)) * ud, 1e-8);
            if (!img) {
                throw NotCliffordError("unitary does not map Paulis to Paulis");
            }
            (kind == 'X' ? xs : zs).push_back(*img);
        }
    }
    return CliffordTableau(std::move(xs), std::move(zs));
}

namespace {

// Projects v onto the symplectic complement of the given pairs.
uint64_t project_out(size_t n, uint64_t v, const std::vector<std::pair<uint64_t, uint64_t>> &pairs) {
    for (const auto &[a, b] : pairs) {
        const bool va = symplectic_inner(n, v, a);
        const bool vb = symplectic_inner(n, v, b);
        if (vb) {
            v ^= a;
        }
        if (va) {
            v ^= b;
        }
    }
    return v;
}

uint64_t random_row(size_t n, Rng &rng) {
    return rng.next() & low_mask(2 * n);
}

}  // namespace

CliffordTableau CliffordTableau::random(size_t n, Rng &rng) {
    std::vector<std::pair<uint64_t, uint64_t>> pairs;
    for (size_t q = 0; q < n; q++) {
        uint64_t a = 0;
        while (a == 0) {
            a = project_out(n, random_row(n, rng), pairs);
        }
        uint64_t b = 0;
        while (!symplectic_inner(n, a, b)) {
            b = project_out(n, random_row(n, rng), pairs);
        }
        pairs.emplace_back(a, b);
    }
    std::vector<PauliString> xs, zs;
    for (const auto &[a, b] : pairs) {
        xs.push_back(PauliString::from_row(n, a, rng.bit() ? 2 : 0));
        zs.push_back(PauliString::from_row(n, b, rng.bit() ? 2 : 0));
    }
    return CliffordTableau(std::move(xs), std::move(zs));
}

Gf2Matrix CliffordTableau::symplectic() const {
    const size_t n = num_qubits();
    Gf2Matrix m(0, 2 * n);
    for (const auto &p : x_images_) {
        m.append_row(p.row());
    }
    for (const auto &p : z_images_) {
        m.append_row(p.row());
    }
    return m;
}

bool CliffordTableau::is_symplectic() const {
    const size_t n = num_qubits();
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (commutator(x_images_[i], x_images_[j]) || commutator(z_images_[i], z_images_[j])) {
                return false;
            }
            if (commutator(x_images_[i], z_images_[j]) != (i == j)) {
                return false;
            }
        }
    }
    return true;
}

PauliString CliffordTableau::conjugate(const PauliString &p) const {
    const size_t n = num_qubits();
    if (p.num_qubits() != n) {
        throw DimensionError("conjugate: width mismatch");
    }
    PauliString out(n, 0, 0, p.phase() + std::popcount(p.x() & p.z()));
    for (size_t q = 0; q < n; q++) {
        if ((p.x() >> q) & 1) {
            out = out * x_images_[q];
        }
    }
    for (size_t q = 0; q < n; q++) {
        if ((p.z() >> q) & 1) {
            out = out * z_images_[q];
        }
    }
    return out;
}

PauliString conjugate_pauli(const CliffordTableau &c, const PauliString &p) {
    return c.conjugate(p);
}

CliffordTableau CliffordTableau::then(const CliffordTableau &next) const {
    if (next.num_qubits() != num_qubits()) {
        throw DimensionError("composing tableaus of different widths");
    }
    std::vector<PauliString> xs, zs;
    for (size_t q = 0; q < num_qubits(); q++) {
        xs.push_back(next.conjugate(x_images_[q]));
        zs.push_back(next.conjugate(z_images_[q]));
    }
    return CliffordTableau(std::move(xs), std::move(zs));
}

CliffordTableau CliffordTableau::inverse() const {
    const size_t n = num_qubits();
    const auto inv = blindgate::inverse(symplectic());
    if (!inv) {
        throw InvariantViolation("tableau is not invertible");
    }
    std::vector<PauliString> xs, zs;
    for (size_t k = 0; k < 2 * n; k++) {
        const PauliString pre = PauliString::from_row(n, inv->row(k));
        const PauliString img = conjugate(pre);
        // img = i^k G for the generator G, so C^dagger G C = i^{-k} pre.
        (k < n ? xs : zs).push_back(pre.with_phase(-img.phase()));
    }
    return CliffordTableau(std::move(xs), std::move(zs));
}

Matrix CliffordTableau::to_dense() const {
    const size_t n = num_qubits();
    if (n > kMaxDenseQubits) {
        throw ResourceError("dense Clifford synthesis limited to 10 qubits");
    }
    const auto dim = static_cast<Eigen::Index>(uint64_t{1} << n);
    const Matrix id = Matrix::Identity(dim, dim);
    Matrix proj = id;
    for (const auto &z : z_images_) {
        proj = proj * (id + dense_matrix(z)) / 2.0;
    }
    Vector psi0;
    for (Eigen::Index j = 0; j < dim; j++) {
        Vector v = proj.col(j);
        if (v.norm() > 0.5 / std::sqrt(static_cast<double>(dim))) {
            psi0 = v / v.norm();
            break;
        }
    }
    if (psi0.size() == 0) {
        throw InvariantViolation("stabilizer projector vanished");
    }
    Eigen::Index lead = 0;
    while (std::abs(psi0(lead)) < 1e-9) {
        lead++;
    }
    psi0 *= std::abs(psi0(lead)) / psi0(lead);
    std::vector<Matrix> xd;
    for (const auto &x : x_images_) {
        xd.push_back(dense_matrix(x));
    }
    Matrix u(dim, dim);
    for (Eigen::Index col = 0; col < dim; col++) {
        Vector v = psi0;
        // C|x> = prod_q img(X_q)^{x_q} C|0>.
        for (size_t q = n; q-- > 0;) {
            if (static_cast<uint64_t>(col) & qubit_bit(q, n)) {
                v = xd[q] * v;
            }
        }
        u.col(col) = v;
    }
    return u;
}

std::string CliffordTableau::str() const {
    std::string out;
    for (size_t q = 0; q < num_qubits(); q++) {
        out += "X" + std::to_string(q) + "->" + x_images_[q].str() + " Z" + std::to_string(q) + "->" +
               z_images_[q].str();
        if (q + 1 < num_qubits()) {
            out += ", ";
        }
    }
    return out;
}

namespace {

using RowPair = std::pair<uint64_t, uint64_t>;

// Partners for isotropic vectors, then extra pairs from the remaining complement.
std::vector<RowPair> complete_frame(size_t n, std::vector<RowPair> pairs, const std::vector<uint64_t> &isotropic) {
    std::vector<uint64_t> partners;
    for (size_t k = 0; k < isotropic.size(); k++) {
        Gf2Matrix a(0, 2 * n);
        uint64_t rhs = 0;
        size_t row = 0;
        auto add = [&](uint64_t v, bool bit) {
            a.append_row(omega(n, v));
            if (bit) {
                rhs |= uint64_t{1} << row;
            }
            row++;
        };
        for (size_t l = 0; l < isotropic.size(); l++) {
            add(isotropic[l], l == k);
        }
        for (const auto &[p, q] : pairs) {
            add(p, false);
            add(q, false);
        }
        for (uint64_t f : partners) {
            add(f, false);
        }
        const auto f = solve(a, rhs);
        if (!f) {
            throw InvariantViolation("no symplectic partner for an isotropic vector");
        }
        partners.push_back(*f);
    }
    for (size_t k = 0; k < isotropic.size(); k++) {
        pairs.emplace_back(isotropic[k], partners[k]);
    }
    Gf2Matrix used(0, 2 * n);
    for (const auto &[p, q] : pairs) {
        used.append_row(omega(n, p));
        used.append_row(omega(n, q));
    }
    const Gf2Matrix rest = nullspace(used);
    std::vector<uint64_t> pool(rest.row_words().begin(), rest.row_words().end());
    while (!pool.empty()) {
        const uint64_t a = pool.front();
        size_t j = 1;
        while (j < pool.size() && !symplectic_inner(n, a, pool[j])) {
            j++;
        }
        if (j == pool.size()) {
            throw InvariantViolation("complement is not symplectic");
        }
        const uint64_t b = pool[j];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
        pool.erase(pool.begin());
        for (uint64_t &v : pool) {
            const bool va = symplectic_inner(n, v, a);
            const bool vb = symplectic_inner(n, v, b);
            if (vb) {
                v ^= a;
            }
            if (va) {
                v ^= b;
            }
        }
        pairs.emplace_back(a, b);
    }
    if (pairs.size() != n) {
        throw InvariantViolation("symplectic frame has the wrong size");
    }
    return pairs;
}

}  // namespace

CliffordTableau clifford_mapping(std::span<const PauliString> sources, std::span<const PauliString> targets) {
    if (sources.size() != targets.size() || sources.empty()) {
        throw DimensionError("clifford_mapping needs matching nonempty source and target lists");
    }
    const size_t n = sources.front().num_qubits();
    Gf2Matrix src_rows(0, 2 * n), tgt_rows(0, 2 * n);
    for (size_t i = 0; i < sources.size(); i++) {
        if (sources[i].num_qubits() != n || targets[i].num_qubits() != n) {
            throw DimensionError("clifford_mapping width mismatch");
        }
        if (!sources[i].is_hermitian() || !targets[i].is_hermitian()) {
            throw ValidationError("clifford_mapping needs Hermitian Paulis");
        }
        for (size_t j = 0; j < i; j++) {
            if (commutator(sources[i], sources[j]) != commutator(targets[i], targets[j])) {
                throw InvariantViolation("sources and targets have different commutation patterns");
            }
        }
        src_rows.append_row(sources[i].row());
        tgt_rows.append_row(targets[i].row());
    }
    if (rank(src_rows) != sources.size() || rank(tgt_rows) != targets.size()) {
        throw ValidationError("clifford_mapping needs independent Paulis");
    }

    // Symplectic Gram-Schmidt on both sides in lockstep; the commutators agree so the
    // same elimination steps apply.
    std::vector<RowPair> work;
    for (size_t i = 0; i < sources.size(); i++) {
        work.emplace_back(sources[i].row(), targets[i].row());
    }
    std::vector<RowPair> src_pairs, tgt_pairs;
    std::vector<uint64_t> src_iso, tgt_iso;
    while (!work.empty()) {
        const RowPair u = work.front();
        size_t j = 1;
        while (j < work.size() && !symplectic_inner(n, u.first, work[j].first)) {
            j++;
        }
        if (j == work.size()) {
            src_iso.push_back(u.first);
            tgt_iso.push_back(u.second);
            work.erase(work.begin());
            continue;
        }
        const RowPair w = work[j];
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
        work.erase(work.begin());
        for (auto &v : work) {
            const bool vu = symplectic_inner(n, v.first, u.first);
            const bool vw = symplectic_inner(n, v.first, w.first);
            if (vw) {
                v.first ^= u.first;
                v.second ^= u.second;
            }
            if (vu) {
                v.first ^= w.first;
                v.second ^= w.second;
            }
        }
        src_pairs.emplace_back(u.first, w.first);
        tgt_pairs.emplace_back(u.second, w.second);
    }
    const auto src_frame = complete_frame(n, src_pairs, src_iso);
    const auto tgt_frame = complete_frame(n, tgt_pairs, tgt_iso);

    Gf2Matrix a(0, 2 * n), b(0, 2 * n);
    for (size_t k = 0; k < n; k++) {
        a.append_row(src_frame[k].first);
        a.append_row(src_frame[k].second);
        b.append_row(tgt_frame[k].first);
        b.append_row(tgt_frame[k].second);
    }
    const auto a_inv = inverse(a);
    if (!a_inv) {
        throw InvariantViolation("source frame is singular");
    }
    // Row-vector convention: v -> v M with M = A^{-1} B sends frame row k of A to row k of B.
    const Gf2Matrix m = (*a_inv) * b;

    std::vector<PauliString> xs, zs;
    for (size_t q = 0; q < n; q++) {
        xs.push_back(PauliString::from_row(n, m.row(q)));
        zs.push_back(PauliString::from_row(n, m.row(n + q)));
    }
    const CliffordTableau unsigned_map(xs, zs);

    // Each generator sign enters the image of a source once per occurrence in its row.
    uint64_t rhs = 0;
    for (size_t i = 0; i < sources.size(); i++) {
        const PauliString img = unsigned_map.conjugate(sources[i]);
        if (img.row() != targets[i].row()) {
            throw InvariantViolation("symplectic map does not hit the target");
        }
        if (img.phase() != targets[i].phase()) {
            rhs |= uint64_t{1} << i;
        }
    }
    const auto signs = solve(src_rows, rhs);
    if (!signs) {
        throw InvariantViolation("sign system is inconsistent");
    }
    for (size_t q = 0; q < n; q++) {
        if ((*signs >> q) & 1) {
            xs[q] = xs[q].with_phase(2);
        }
        if ((*signs >> (n + q)) & 1) {
            zs[q] = zs[q].with_phase(2);
        }
    }
    CliffordTableau out(std::move(xs), std::move(zs));
    for (size_t i = 0; i < sources.size(); i++) {
        if (out.conjugate(sources[i]) != targets[i]) {
            throw InvariantViolation("clifford_mapping failed to reproduce a target");
        }
    }
    return out;
}

}  // namespace blindgate

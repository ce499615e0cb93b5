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

#include "blindgate/state.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "blindgate/errors.h"

namespace blindgate {

namespace {

size_t layout_qubits(const Layout &layout) {
    size_t n = 0;
    for (const auto &reg : layout) {
        if (reg.qubits == 0) {
            throw ValidationError("register '" + reg.name + "' has no qubits");
        }
        n += reg.qubits;
    }
    for (size_t i = 0; i < layout.size(); i++) {
        for (size_t j = i + 1; j < layout.size(); j++) {
            if (layout[i].name == layout[j].name) {
                throw ValidationError("duplicate register name '" + layout[i].name + "'");
            }
        }
    }
    return n;
}

void check_targets(std::span<const size_t> targets, size_t n) {
    for (size_t i = 0; i < targets.size(); i++) {
        if (targets[i] >= n) {
            throw DimensionError("target qubit out of range");
        }
        for (size_t j = i + 1; j < targets.size(); j++) {
            if (targets[i] == targets[j]) {
                throw DimensionError("repeated target qubit");
            }
        }
    }
}

// Index bookkeeping that splits a register into (rest, targets); the full index of
// (r, t) is bases[r] | offsets[t]. Both sides keep qubit 0 most significant.
struct IndexSplit {
    std::vector<uint64_t> bases;
    std::vector<uint64_t> offsets;
    std::vector<size_t> rest;
};

IndexSplit split_indices(size_t n, std::span<const size_t> targets) {
    check_targets(targets, n);
    IndexSplit s;
    for (size_t q = 0; q < n; q++) {
        if (std::find(targets.begin(), targets.end(), q) == targets.end()) {
            s.rest.push_back(q);
        }
    }
    auto spread = [n](uint64_t local, std::span<const size_t> qubits) {
        uint64_t full = 0;
        const size_t k = qubits.size();
        for (size_t j = 0; j < k; j++) {
            if ((local >> (k - 1 - j)) & 1) {
                full |= qubit_bit(qubits[j], n);
            }
        }
        return full;
    };
    s.offsets.resize(uint64_t{1} << targets.size());
    for (uint64_t t = 0; t < s.offsets.size(); t++) {
        s.offsets[t] = spread(t, targets);
    }
    s.bases.resize(uint64_t{1} << s.rest.size());
    for (uint64_t r = 0; r < s.bases.size(); r++) {
        s.bases[r] = spread(r, s.rest);
    }
    return s;
}

void apply_in_place(Matrix &cols, const IndexSplit &s, const Matrix &u) {
    const auto k = static_cast<Eigen::Index>(s.offsets.size());
    Vector g(k);
    for (Eigen::Index c = 0; c < cols.cols(); c++) {
        for (uint64_t base : s.bases) {
            for (Eigen::Index t = 0; t < k; t++) {
                g(t) = cols(static_cast<Eigen::Index>(base | s.offsets[t]), c);
            }
            const Vector h = u * g;
            for (Eigen::Index t = 0; t < k; t++) {
                cols(static_cast<Eigen::Index>(base | s.offsets[t]), c) = h(t);
            }
        }
    }
}

// Rows indexed by rest, columns by target pattern.
Matrix reshape_pure(const Vector &v, const IndexSplit &s) {
    Matrix a(s.bases.size(), s.offsets.size());
    for (size_t r = 0; r < s.bases.size(); r++) {
        for (size_t t = 0; t < s.offsets.size(); t++) {
            a(r, t) = v(static_cast<Eigen::Index>(s.bases[r] | s.offsets[t]));
        }
    }
    return a;
}

// Density matrix reindexed so row r * T + t is (rest r, target t).
Matrix reorder_mixed(const Matrix &rho, const IndexSplit &s) {
    const size_t T = s.offsets.size();
    const size_t dim = s.bases.size() * T;
    std::vector<Eigen::Index> perm(dim);
    for (size_t r = 0; r < s.bases.size(); r++) {
        for (size_t t = 0; t < T; t++) {
            perm[r * T + t] = static_cast<Eigen::Index>(s.bases[r] | s.offsets[t]);
        }
    }
    Matrix out(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            out(i, j) = rho(perm[i], perm[j]);
        }
    }
    return out;
}

Layout remove_qubits(const Layout &layout, std::span<const size_t> removed) {
    Layout out;
    size_t offset = 0;
    for (const auto &reg : layout) {
        size_t kept = 0;
        for (size_t q = offset; q < offset + reg.qubits; q++) {
            if (std::find(removed.begin(), removed.end(), q) == removed.end()) {
                kept++;
            }
        }
        if (kept > 0) {
            out.push_back({reg.name, kept});
        }
        offset += reg.qubits;
    }
    return out;
}

constexpr double kBranchCutoff = 1e-14;

std::vector<MeasurementResult> all_outcomes(const QuantumState &state, std::span<const size_t> targets,
                                            const MeasurementBasis &basis, bool keep_zero) {
    const IndexSplit s = split_indices(state.num_qubits(), targets);
    if (basis.size() != s.offsets.size()) {
        throw DimensionError("measurement basis dimension does not match targets");
    }
    const Layout post_layout = remove_qubits(state.layout(), targets);
    const Matrix &b = basis.columns();
    std::vector<MeasurementResult> out;
    if (state.is_pure()) {
        const Matrix cond = reshape_pure(state.vector(), s) * b.conjugate();
        for (Eigen::Index k = 0; k < cond.cols(); k++) {
            const double p = cond.col(k).squaredNorm();
            if (p > kBranchCutoff) {
                out.push_back({static_cast<size_t>(k), p, QuantumState::pure(post_layout, cond.col(k) / std::sqrt(p))});
            } else if (keep_zero) {
                out.push_back({static_cast<size_t>(k), p, QuantumState()});
            }
        }
        return out;
    }
    const Matrix r = reorder_mixed(state.density(), s);
    const size_t R = s.bases.size();
    const size_t T = s.offsets.size();
    for (Eigen::Index k = 0; k < b.cols(); k++) {
        Matrix w = Matrix::Zero(R * T, R);
        for (size_t i = 0; i < R; i++) {
            for (size_t t = 0; t < T; t++) {
                w(i * T + t, i) = b(t, k);
            }
        }
        const Matrix cond = w.adjoint() * r * w;
        const double p = cond.trace().real();
        if (p > kBranchCutoff) {
            out.push_back({static_cast<size_t>(k), p, QuantumState::mixed(post_layout, cond / p)});
        } else if (keep_zero) {
            out.push_back({static_cast<size_t>(k), p, QuantumState()});
        }
    }
    return out;
}

}  // namespace

QuantumState::QuantumState(Layout layout, std::variant<Vector, Matrix> data)
    : layout_(std::move(layout)), num_qubits_(layout_qubits(layout_)), data_(std::move(data)) {}

QuantumState QuantumState::pure(Layout layout, Vector amplitudes) {
    const size_t n = layout_qubits(layout);
    if (n > kMaxPureQubits) {
        throw ResourceError("pure states are limited to 14 qubits");
    }
    if (static_cast<uint64_t>(amplitudes.size()) != (uint64_t{1} << n)) {
        throw DimensionError("amplitude count does not match layout");
    }
    if (std::abs(amplitudes.norm() - 1.0) > 1e-10) {
        throw ValidationError("pure state is not normalised");
    }
    return QuantumState(std::move(layout), std::move(amplitudes));
}

QuantumState QuantumState::mixed(Layout layout, Matrix rho) {
    const size_t n = layout_qubits(layout);
    if (n > kMaxMixedQubits) {
        throw ResourceError("density matrices are limited to 10 qubits");
    }
    if (static_cast<uint64_t>(rho.rows()) != (uint64_t{1} << n) || rho.cols() != rho.rows()) {
        throw DimensionError("density matrix size does not match layout");
    }
    validate_density_matrix(rho);
    Matrix herm = (rho + rho.adjoint()) / 2.0;
    return QuantumState(std::move(layout), std::move(herm));
}

QuantumState QuantumState::zero(Layout layout) {
    const size_t n = layout_qubits(layout);
    if (n > kMaxPureQubits) {
        throw ResourceError("pure states are limited to 14 qubits");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(uint64_t{1} << n));
    v(0) = 1.0;
    return QuantumState(std::move(layout), std::move(v));
}

std::vector<size_t> QuantumState::qubits_of(std::string_view name) const {
    size_t offset = 0;
    for (const auto &reg : layout_) {
        if (reg.name == name) {
            std::vector<size_t> out(reg.qubits);
            std::iota(out.begin(), out.end(), offset);
            return out;
        }
        offset += reg.qubits;
    }
    throw ValidationError("no register named '" + std::string(name) + "'");
}

bool QuantumState::has_register(std::string_view name) const {
    return std::any_of(layout_.begin(), layout_.end(), [&](const Register &r) { return r.name == name; });
}

const Vector &QuantumState::vector() const {
    if (!is_pure()) {
        throw ValidationError("state is mixed");
    }
    return std::get<Vector>(data_);
}

Matrix QuantumState::density() const {
    if (is_pure()) {
        const Vector &v = std::get<Vector>(data_);
        return v * v.adjoint();
    }
    return std::get<Matrix>(data_);
}

QuantumState QuantumState::to_mixed() const {
    return mixed(layout_, density());
}

QuantumState tensor(const QuantumState &a, const QuantumState &b) {
    Layout layout = a.layout();
    layout.insert(layout.end(), b.layout().begin(), b.layout().end());
    if (a.is_pure() && b.is_pure()) {
        return QuantumState::pure(std::move(layout), kron(a.vector(), b.vector()));
    }
    return QuantumState::mixed(std::move(layout), kron(a.density(), b.density()));
}

MeasurementBasis::MeasurementBasis(Matrix columns, double tol) : columns_(std::move(columns)) {
    if (!is_unitary(columns_, tol)) {
        throw ValidationError("measurement basis columns are not orthonormal");
    }
}

MeasurementBasis MeasurementBasis::computational(size_t qubits) {
    return MeasurementBasis(gates::identity(qubits));
}

QuantumState apply_unitary(const QuantumState &state, std::span<const size_t> targets, const Matrix &u) {
    const IndexSplit s = split_indices(state.num_qubits(), targets);
    if (static_cast<size_t>(u.rows()) != s.offsets.size() || u.cols() != u.rows()) {
        throw DimensionError("gate size does not match target count");
    }
    if (!is_unitary(u)) {
        throw ValidationError("gate is not unitary");
    }
    if (state.is_pure()) {
        Matrix v = state.vector();
        apply_in_place(v, s, u);
        Vector out = v.col(0);
        out /= out.norm();
        return QuantumState::pure(state.layout(), std::move(out));
    }
    Matrix a = state.density();
    apply_in_place(a, s, u);
    Matrix b = a.adjoint();
    apply_in_place(b, s, u);
    return QuantumState::mixed(state.layout(), b.adjoint());
}

QuantumState apply_controlled_pauli(const QuantumState &state, size_t control, const PauliString &p,
                                    std::span<const size_t> targets) {
    if (std::find(targets.begin(), targets.end(), control) != targets.end()) {
        throw DimensionError("control qubit overlaps the targets");
    }
    if (targets.size() != p.num_qubits()) {
        throw DimensionError("Pauli width does not match target count");
    }
    const Matrix pd = dense_matrix(p);
    const Eigen::Index d = pd.rows();
    Matrix cu = Matrix::Zero(2 * d, 2 * d);
    cu.topLeftCorner(d, d) = Matrix::Identity(d, d);
    cu.bottomRightCorner(d, d) = pd;
    std::vector<size_t> all{control};
    all.insert(all.end(), targets.begin(), targets.end());
    return apply_unitary(state, all, cu);
}

MeasurementResult measure_in_basis(const QuantumState &state, std::span<const size_t> targets,
                                   const MeasurementBasis &basis, Rng &rng) {
    auto branches = all_outcomes(state, targets, basis, false);
    if (branches.empty()) {
        throw InvariantViolation("no outcome has positive probability");
    }
    const double u = rng.uniform();
    double acc = 0.0;
    for (auto &b : branches) {
        acc += b.probability;
        if (u < acc) {
            return std::move(b);
        }
    }
    return std::move(branches.back());
}

MeasurementResult measure_in_basis(const QuantumState &state, std::span<const size_t> targets,
                                   const MeasurementBasis &basis, size_t forced_outcome) {
    if (forced_outcome >= basis.size()) {
        throw ValidationError("forced outcome out of range");
    }
    for (auto &b : all_outcomes(state, targets, basis, false)) {
        if (b.outcome == forced_outcome) {
            return std::move(b);
        }
    }
    throw ValidationError("forced outcome " + std::to_string(forced_outcome) + " has zero probability");
}

std::vector<MeasurementResult> measurement_branches(const QuantumState &state, std::span<const size_t> targets,
                                                    const MeasurementBasis &basis) {
    return all_outcomes(state, targets, basis, false);
}

QuantumState partial_trace(const QuantumState &state, std::span<const std::string> keep) {
    for (const auto &name : keep) {
        if (!state.has_register(name)) {
            throw ValidationError("partial_trace: no register named '" + name + "'");
        }
    }
    std::vector<size_t> kept;
    Layout layout;
    for (const auto &reg : state.layout()) {
        if (std::find(keep.begin(), keep.end(), reg.name) != keep.end()) {
            auto q = state.qubits_of(reg.name);
            kept.insert(kept.end(), q.begin(), q.end());
            layout.push_back(reg);
        }
    }
    if (layout.empty()) {
        throw ValidationError("partial_trace: nothing to keep");
    }
    std::vector<size_t> traced;
    for (size_t q = 0; q < state.num_qubits(); q++) {
        if (std::find(kept.begin(), kept.end(), q) == kept.end()) {
            traced.push_back(q);
        }
    }
    const IndexSplit s = split_indices(state.num_qubits(), traced);
    if (state.is_pure()) {
        const Matrix a = reshape_pure(state.vector(), s);
        return QuantumState::mixed(std::move(layout), a * a.adjoint());
    }
    const Matrix r = reorder_mixed(state.density(), s);
    const size_t R = s.bases.size();
    const size_t T = s.offsets.size();
    Matrix out = Matrix::Zero(R, R);
    for (size_t i = 0; i < R; i++) {
        for (size_t j = 0; j < R; j++) {
            Complex acc = 0;
            for (size_t t = 0; t < T; t++) {
                acc += r(i * T + t, j * T + t);
            }
            out(i, j) = acc;
        }
    }
    return QuantumState::mixed(std::move(layout), std::move(out));
}

void validate_density_matrix(const Matrix &rho, double tol) {
    if (rho.rows() != rho.cols() || rho.rows() == 0) {
        throw DimensionError("density matrix must be square");
    }
    if (!is_hermitian(rho, 1e-9)) {
        throw ValidationError("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > tol) {
        throw ValidationError("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es((rho + rho.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol) {
        throw ValidationError("density matrix is not positive semidefinite");
    }
}

double von_neumann_entropy(const Matrix &rho) {
    validate_density_matrix(rho);
    Eigen::SelfAdjointEigenSolver<Matrix> es((rho + rho.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); i++) {
        const double l = es.eigenvalues()(i);
        if (l > 1e-12) {
            s -= l * std::log2(l);
        }
    }
    return s;
}

double von_neumann_entropy(const QuantumState &state) {
    return state.is_pure() ? 0.0 : von_neumann_entropy(state.density());
}

bool equal_up_to_global_phase(const QuantumState &a, const QuantumState &b, double tol) {
    if (a.dim() != b.dim()) {
        throw DimensionError("states have different dimensions");
    }
    return equal_up_to_global_phase(a.vector(), b.vector(), tol);
}

QuantumState random_state(Layout layout, Rng &rng) {
    const size_t n = layout_qubits(layout);
    if (n > QuantumState::kMaxPureQubits) {
        throw ResourceError("pure states are limited to 14 qubits");
    }
    return QuantumState::pure(std::move(layout), haar_state(size_t{1} << n, rng));
}

QuantumState entangled_reference_state(size_t n) {
    const uint64_t d = uint64_t{1} << n;
    Vector v = Vector::Zero(static_cast<Eigen::Index>(d * d));
    for (uint64_t j = 0; j < d; j++) {
        v(static_cast<Eigen::Index>(j * d + j)) = 1.0 / std::sqrt(static_cast<double>(d));
    }
    return QuantumState::pure({{"psi", n}, {"ref", n}}, std::move(v));
}

}  // namespace blindgate

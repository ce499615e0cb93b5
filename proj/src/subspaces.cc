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

#include "blindgate/subspaces.h"

#include <cmath>
#include <numbers>
#include <numeric>

#include "blindgate/errors.h"

namespace blindgate {

std::vector<double> default_probes() {
    std::vector<double> out;
    for (uint64_t k = 1; k <= 8; k++) {
        double v = 0.0, f = 0.5;
        for (uint64_t i = k; i > 0; i >>= 1, f /= 2) {
            if (i & 1) {
                v += f;
            }
        }
        out.push_back(2.0 * std::numbers::pi * v);
    }
    return out;
}

GateFamily::GateFamily(size_t n, std::vector<Matrix> gates, std::vector<std::string> labels)
    : n_(n), gates_(std::move(gates)), labels_(std::move(labels)) {
    if (n == 0 || n > kMaxQubits) {
        throw ResourceError("gate families need 1 to 5 qubits");
    }
    if (gates_.empty()) {
        throw ValidationError("gate family is empty");
    }
    const auto dim = static_cast<Eigen::Index>(uint64_t{1} << n);
    for (size_t d = 0; d < gates_.size(); d++) {
        if (gates_[d].rows() != dim || gates_[d].cols() != dim) {
            throw DimensionError("gate " + std::to_string(d) + " has the wrong size");
        }
        if (!is_unitary(gates_[d], 1e-10)) {
            throw ValidationError("gate " + std::to_string(d) + " is not unitary");
        }
    }
    if (max_abs(gates_[0] - Matrix::Identity(dim, dim)) > 1e-10) {
        throw ValidationError("gate 0 must be the identity");
    }
    if (labels_.empty()) {
        for (size_t d = 0; d < gates_.size(); d++) {
            labels_.push_back(d == 0 ? "I" : "U" + std::to_string(d));
        }
    } else if (labels_.size() != gates_.size()) {
        throw DimensionError("label count does not match gate count");
    }
    weights_.assign(gates_.size(), 1.0 / static_cast<double>(gates_.size()));
}

GateFamily GateFamily::parametrized(size_t n, ParametrizedGate gate) {
    if (gate.probes.empty()) {
        gate.probes = default_probes();
    }
    const auto dim = static_cast<Eigen::Index>(uint64_t{1} << n);
    std::vector<Matrix> gates{Matrix::Identity(dim, dim)};
    std::vector<std::string> labels{"I"};
    for (double theta : gate.probes) {
        gates.push_back(gate.build(theta));
        labels.push_back(gate.label + "(" + std::to_string(theta) + ")");
    }
    GateFamily family(n, std::move(gates), std::move(labels));
    family.param_ = std::move(gate);
    return family;
}

const Matrix &GateFamily::gate(size_t d) const {
    if (d >= gates_.size()) {
        throw ValidationError("choice " + std::to_string(d) + " out of range");
    }
    return gates_[d];
}

Matrix GateFamily::instantiate(double theta) const {
    if (!param_) {
        throw ValidationError("family has no parametrized gate");
    }
    Matrix u = param_->build(theta);
    if (!is_unitary(u, 1e-10)) {
        throw ValidationError("parametrized gate is not unitary");
    }
    return u;
}

GateFamily GateFamily::transformed(const std::function<Matrix(const Matrix &)> &f) const {
    std::vector<Matrix> gates;
    for (const auto &g : gates_) {
        gates.push_back(f(g));
    }
    GateFamily out(n_, std::move(gates), labels_);
    out.weights_ = weights_;
    if (param_) {
        ParametrizedGate p = *param_;
        p.build = [inner = param_->build, f](double theta) { return f(inner(theta)); };
        out.param_ = std::move(p);
    }
    return out;
}

void GateFamily::set_weights(std::vector<double> weights) {
    if (weights.size() != gates_.size()) {
        throw DimensionError("weight count does not match gate count");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw ValidationError("choice weights must be nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw ValidationError("choice weights must sum to 1");
    }
    weights_ = std::move(weights);
}

PauliSubspace::PauliSubspace(size_t n, const Gf2Matrix &rows) : n_(n) {
    if (rows.cols() != 2 * n) {
        throw DimensionError("subspace rows must have 2n columns");
    }
    const auto order = qubit_major_order(n);
    generators_ = rref(rows, order);
}

PauliSubspace PauliSubspace::trivial(size_t n) {
    return PauliSubspace(n, Gf2Matrix(0, 2 * n));
}

PauliSubspace PauliSubspace::full(size_t n) {
    return PauliSubspace(n, Gf2Matrix::identity(2 * n));
}

std::vector<PauliString> PauliSubspace::generator_paulis() const {
    std::vector<PauliString> out;
    for (uint64_t row : generators_.row_words()) {
        out.push_back(PauliString::from_row(n_, row));
    }
    return out;
}

bool PauliSubspace::contains(uint64_t row) const {
    return in_row_space(generators_, row);
}

std::vector<uint64_t> PauliSubspace::elements() const {
    std::vector<uint64_t> out;
    const size_t r = dim();
    for (uint64_t k = 0; k < (uint64_t{1} << r); k++) {
        uint64_t row = 0;
        for (size_t i = 0; i < r; i++) {
            if ((k >> i) & 1) {
                row ^= generators_.row(i);
            }
        }
        out.push_back(row);
    }
    return out;
}

namespace {

// Tr(P^dagger U) using the single nonzero entry per column of P.
Complex pauli_overlap(const PauliString &p, const Matrix &u) {
    const size_t n = p.num_qubits();
    const uint64_t xm = amplitude_mask(p.x(), n);
    const uint64_t zm = amplitude_mask(p.z(), n);
    const Complex scale = std::conj(i_pow(p.phase() + std::popcount(p.x() & p.z())));
    Complex acc = 0.0;
    for (uint64_t c = 0; c < static_cast<uint64_t>(u.cols()); c++) {
        const Complex e = u(static_cast<Eigen::Index>(c ^ xm), static_cast<Eigen::Index>(c));
        acc += parity(zm & c) ? -e : e;
    }
    return scale * acc;
}

Gf2Matrix omega_rows(size_t n, std::span<const uint64_t> rows) {
    Gf2Matrix a(0, 2 * n);
    for (uint64_t r : rows) {
        a.append_row(omega(n, r));
    }
    return a;
}

PauliString indexed_product(const std::vector<PauliString> &gens, size_t n, uint64_t index) {
    const size_t m = gens.size();
    if (m < 64 && (index >> m) != 0) {
        throw DimensionError("basis index out of range");
    }
    PauliString p(n);
    for (size_t i = 0; i < m; i++) {
        if ((index >> (m - 1 - i)) & 1) {
            p = p * gens[i];
        }
    }
    return p;
}

}  // namespace

Matrix PauliDecomposition::reconstruct() const {
    const auto dim = static_cast<Eigen::Index>(uint64_t{1} << n);
    Matrix out = Matrix::Zero(dim, dim);
    for (uint64_t row = 0; row < coefficients.size(); row++) {
        if (coefficients[row] != Complex(0, 0)) {
            out += coefficients[row] * dense_matrix(PauliString::from_row(n, row));
        }
    }
    return out;
}

PauliDecomposition pauli_decompose(const Matrix &u, size_t n) {
    if (n > GateFamily::kMaxQubits) {
        throw ResourceError("Pauli decomposition limited to 5 qubits");
    }
    if (static_cast<uint64_t>(u.rows()) != (uint64_t{1} << n) || u.cols() != u.rows()) {
        throw DimensionError("matrix size does not match qubit count");
    }
    if (!is_unitary(u, 1e-10)) {
        throw ValidationError("pauli_decompose needs a unitary");
    }
    PauliDecomposition out{n, {}};
    const double scale = 1.0 / static_cast<double>(u.rows());
    for (uint64_t row = 0; row < (uint64_t{1} << (2 * n)); row++) {
        out.coefficients.push_back(pauli_overlap(PauliString::from_row(n, row), u) * scale);
    }
    return out;
}

std::optional<bool> conjugation_sign(const Matrix &u, const PauliString &p, double tol) {
    const Matrix pd = dense_matrix(p);
    const Matrix c = u * pd * u.adjoint();
    if (max_abs(c - pd) <= tol) {
        return false;
    }
    if (max_abs(c + pd) <= tol) {
        return true;
    }
    return std::nullopt;
}

PauliSubspace preserved_subspace(const GateFamily &family) {
    const size_t n = family.num_qubits();
    std::vector<Matrix> adj;
    for (const auto &g : family.gates()) {
        adj.push_back(g.adjoint());
    }
    Gf2Matrix rows(0, 2 * n);
    uint64_t count = 1;
    for (uint64_t row = 1; row < (uint64_t{1} << (2 * n)); row++) {
        const Matrix pd = dense_matrix(PauliString::from_row(n, row));
        bool kept = true;
        for (size_t d = 0; d < family.size() && kept; d++) {
            const Matrix c = family.gate(d) * pd * adj[d];
            kept = max_abs(c - pd) <= 1e-10 || max_abs(c + pd) <= 1e-10;
        }
        if (kept) {
            rows.append_row(row);
            count++;
        }
    }
    PauliSubspace pf(n, rows);
    if (count != (uint64_t{1} << pf.dim())) {
        throw InvariantViolation("preserved Paulis do not form a group");
    }
    return pf;
}

uint64_t adjustment_row(const Matrix &u, const PauliSubspace &pf) {
    const size_t n = pf.num_qubits();
    const auto gens = pf.generators().row_words();
    Gf2Matrix a = omega_rows(n, gens);
    uint64_t rhs = 0;
    for (size_t k = 0; k < gens.size(); k++) {
        const auto s = conjugation_sign(u, PauliString::from_row(n, gens[k]));
        if (!s) {
            throw ValidationError("gate does not preserve the subspace");
        }
        if (*s) {
            rhs |= uint64_t{1} << k;
        }
    }
    auto y = solve(a, rhs);
    if (!y) {
        throw InvariantViolation("no Pauli adjustment exists");
    }
    // Reducing by the echelon null space clears the earliest possible bits.
    const Gf2Matrix null = nullspace(a);
    uint64_t best = *y;
    for (size_t i = 0; i < null.rows(); i++) {
        const uint64_t row = null.row(i);
        const size_t lead = std::countr_zero(row);
        if ((best >> lead) & 1) {
            best ^= row;
        }
    }
    return best;
}

Matrix adjust_gate(const Matrix &u, const PauliSubspace &pf) {
    const uint64_t y = adjustment_row(u, pf);
    if (y == 0) {
        return u;
    }
    return dense_matrix(PauliString::from_row(pf.num_qubits(), y)) * u;
}

GateFamily adjust_family(const GateFamily &family, const PauliSubspace &pf) {
    if (family.num_qubits() != pf.num_qubits()) {
        throw DimensionError("family and subspace widths differ");
    }
    return family.transformed([pf](const Matrix &u) { return adjust_gate(u, pf); });
}

BasisB::BasisB(size_t n, size_t r, std::vector<PauliString> paulis)
    : n_(n), r_(r), paulis_(std::move(paulis)) {
    if (paulis_.size() + r != 2 * n) {
        throw DimensionError("basis size must be 2n - r");
    }
    for (size_t i = 0; i < paulis_.size(); i++) {
        if (paulis_[i].num_qubits() != n) {
            throw DimensionError("basis Pauli width mismatch");
        }
        uint64_t c = 0;
        for (size_t j = 0; j < i; j++) {
            if (commutator(paulis_[i], paulis_[j])) {
                c |= uint64_t{1} << j;
            }
        }
        c_vectors_.push_back(c);
    }
}

uint64_t BasisB::c_index(size_t i) const {
    const size_t m = paulis_.size();
    uint64_t out = 0;
    for (size_t j = 0; j < m; j++) {
        if ((c_vectors_[i] >> j) & 1) {
            out |= uint64_t{1} << (m - 1 - j);
        }
    }
    return out;
}

PauliString BasisB::element(uint64_t index) const {
    return indexed_product(paulis_, n_, index);
}

BasisB support_basis(const PauliSubspace &pf) {
    const size_t n = pf.num_qubits();
    const Gf2Matrix null = nullspace(omega_rows(n, pf.generators().row_words()));
    const auto order = qubit_major_order(n);
    const Gf2Matrix canon = rref(null, order);
    std::vector<PauliString> paulis;
    for (uint64_t row : canon.row_words()) {
        paulis.push_back(PauliString::from_row(n, row));
    }
    return BasisB(n, pf.dim(), std::move(paulis));
}

PauliString DualBasisQ::element(uint64_t index) const {
    return indexed_product(paulis_, n_, index);
}

DualBasisQ dual_basis(const BasisB &b) {
    const size_t n = b.num_qubits();
    std::vector<uint64_t> rows;
    for (const auto &p : b.paulis()) {
        rows.push_back(p.row());
    }
    const Gf2Matrix a = omega_rows(n, rows);
    std::vector<PauliString> q;
    for (size_t i = 0; i < rows.size(); i++) {
        auto v = solve(a, uint64_t{1} << i);
        if (!v) {
            throw InvariantViolation("dual basis system is inconsistent");
        }
        q.push_back(PauliString::from_row(n, *v));
    }
    return DualBasisQ(n, std::move(q));
}

std::vector<Complex> decompose_in_b(const Matrix &u, const BasisB &b, double tol) {
    const size_t n = b.num_qubits();
    if (static_cast<uint64_t>(u.rows()) != (uint64_t{1} << n) || u.cols() != u.rows()) {
        throw DimensionError("matrix size does not match basis width");
    }
    const double scale = 1.0 / static_cast<double>(u.rows());
    std::vector<Complex> gamma;
    Matrix sum = Matrix::Zero(u.rows(), u.cols());
    for (uint64_t x = 0; x < b.num_elements(); x++) {
        const PauliString bx = b.element(x);
        const Complex g = pauli_overlap(bx, u) * scale;
        gamma.push_back(g);
        sum += g * dense_matrix(bx);
    }
    const double residual = max_abs(sum - u);
    if (residual > tol) {
        throw UnsupportedGateError("gate is not supported on the basis (residual " + std::to_string(residual) + ")");
    }
    return gamma;
}

FamilyAnalysis analyze_family(const GateFamily &family) {
    PauliSubspace pf = preserved_subspace(family);
    std::vector<uint64_t> adjustments;
    for (const auto &g : family.gates()) {
        adjustments.push_back(adjustment_row(g, pf));
    }
    GateFamily adjusted = adjust_family(family, pf);
    BasisB b = support_basis(pf);
    DualBasisQ q = dual_basis(b);
    return {std::move(pf), std::move(adjusted), std::move(b), std::move(q), std::move(adjustments)};
}

}  // namespace blindgate

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

#include "blindgate/padding.h"

#include <cmath>

#include "blindgate/errors.h"

namespace blindgate {

PaddingSet::PaddingSet(size_t n, std::map<uint64_t, double> weights) : n_(n), weights_(std::move(weights)) {
    if (n > kMaxQubits) {
        throw ResourceError("padding sets limited to 6 qubits");
    }
    double total = 0.0;
    for (const auto &[row, w] : weights_) {
        if (row >> (2 * n)) {
            throw DimensionError("padding row wider than 2n");
        }
        if (!(w >= 0.0)) {
            throw ValidationError("padding weights must be nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw ValidationError("padding weights must sum to 1");
    }
}

PaddingSet PaddingSet::point_mass(size_t n, uint64_t row) {
    return PaddingSet(n, {{row, 1.0}});
}

PaddingSet PaddingSet::uniform(size_t n) {
    std::map<uint64_t, double> w;
    const uint64_t count = uint64_t{1} << (2 * n);
    for (uint64_t row = 0; row < count; row++) {
        w[row] = 1.0 / static_cast<double>(count);
    }
    return PaddingSet(n, std::move(w));
}

double PaddingSet::weight(uint64_t row) const {
    auto it = weights_.find(row);
    return it == weights_.end() ? 0.0 : it->second;
}

PaddingSet b_uniform_padding(const BasisB &b) {
    std::map<uint64_t, double> w;
    const double each = 1.0 / static_cast<double>(b.num_elements());
    for (uint64_t x = 0; x < b.num_elements(); x++) {
        w[b.element(x).row()] += each;
    }
    return PaddingSet(b.num_qubits(), std::move(w));
}

std::vector<double> walsh_transform(const PaddingSet &p) {
    const size_t n = p.num_qubits();
    std::vector<double> hat(uint64_t{1} << (2 * n), 0.0);
    for (uint64_t y = 0; y < hat.size(); y++) {
        double acc = 0.0;
        for (const auto &[x, w] : p.weights()) {
            acc += symplectic_inner(n, x, y) ? -w : w;
        }
        hat[y] = acc;
    }
    return hat;
}

std::vector<double> inverse_walsh_transform(size_t n, const std::vector<double> &hat) {
    const uint64_t count = uint64_t{1} << (2 * n);
    if (hat.size() != count) {
        throw DimensionError("Walsh table must have 4^n entries");
    }
    std::vector<double> alpha(count, 0.0);
    for (uint64_t x = 0; x < count; x++) {
        double acc = 0.0;
        for (uint64_t y = 0; y < count; y++) {
            acc += symplectic_inner(n, x, y) ? -hat[y] : hat[y];
        }
        alpha[x] = acc / static_cast<double>(count);
    }
    return alpha;
}

HidingRuleReport check_hiding_rule(const PaddingSet &p, const PauliSubspace &pf) {
    if (p.num_qubits() != pf.num_qubits()) {
        throw DimensionError("padding and subspace widths differ");
    }
    HidingRuleReport report;
    report.walsh = walsh_transform(p);
    for (uint64_t y = 0; y < report.walsh.size(); y++) {
        if (pf.contains(y)) {
            continue;
        }
        const double v = std::abs(report.walsh[y]);
        report.max_violation = std::max(report.max_violation, v);
        if (v > 1e-10) {
            report.violations.push_back(y);
        }
    }
    report.pass = report.violations.empty();
    return report;
}

std::vector<Matrix> default_hiding_test_states(size_t n, Rng &rng, size_t haar_count) {
    const auto dim = static_cast<Eigen::Index>(uint64_t{1} << n);
    std::vector<Matrix> out;
    for (Eigen::Index b = 0; b < dim; b++) {
        Matrix rho = Matrix::Zero(dim, dim);
        rho(b, b) = 1.0;
        out.push_back(rho);
    }
    const Matrix id = Matrix::Identity(dim, dim);
    for (uint64_t row = 1; row < (uint64_t{1} << (2 * n)); row++) {
        const Matrix p = dense_matrix(PauliString::from_row(n, row));
        out.push_back((id + p) / static_cast<double>(dim));
        out.push_back((id - p) / static_cast<double>(dim));
    }
    for (size_t k = 0; k < haar_count; k++) {
        const Vector v = haar_state(static_cast<size_t>(dim), rng);
        out.push_back(v * v.adjoint());
    }
    return out;
}

Matrix pauli_channel(const PaddingSet &p, const Matrix &rho) {
    Matrix out = Matrix::Zero(rho.rows(), rho.cols());
    for (const auto &[row, w] : p.weights()) {
        if (w == 0.0) {
            continue;
        }
        const Matrix pd = dense_matrix(PauliString::from_row(p.num_qubits(), row));
        out += w * (pd * rho * pd.adjoint());
    }
    return out;
}

HidingPropertyReport check_hiding_property(const PaddingSet &p0, const PaddingSet &p1, const Matrix &u,
                                           const std::vector<Matrix> &test_states) {
    if (p0.num_qubits() != p1.num_qubits()) {
        throw DimensionError("padding widths differ");
    }
    if (!is_unitary(u, 1e-10)) {
        throw ValidationError("hiding property needs a unitary");
    }
    HidingPropertyReport report;
    for (const auto &rho : test_states) {
        const double d = trace_distance(pauli_channel(p0, rho), pauli_channel(p1, u * rho * u.adjoint()));
        report.distances.push_back(d);
        report.max_distance = std::max(report.max_distance, d);
    }
    report.pass = report.max_distance <= 1e-9;
    return report;
}

namespace {

Eigen::MatrixXd hiding_equations(const PauliSubspace &pf) {
    const size_t n = pf.num_qubits();
    const uint64_t count = uint64_t{1} << (2 * n);
    std::vector<uint64_t> outside;
    for (uint64_t y = 0; y < count; y++) {
        if (!pf.contains(y)) {
            outside.push_back(y);
        }
    }
    Eigen::MatrixXd a(static_cast<Eigen::Index>(outside.size() + 1), static_cast<Eigen::Index>(count));
    a.row(0).setOnes();
    for (size_t k = 0; k < outside.size(); k++) {
        for (uint64_t x = 0; x < count; x++) {
            a(static_cast<Eigen::Index>(k + 1), static_cast<Eigen::Index>(x)) =
                symplectic_inner(n, x, outside[k]) ? -1.0 : 1.0;
        }
    }
    return a;
}

}  // namespace

bool PaddingSolutionSpace::contains(const PaddingSet &p, double tol) const {
    Eigen::VectorXd alpha = Eigen::VectorXd::Zero(particular.size());
    for (const auto &[row, w] : p.weights()) {
        alpha(static_cast<Eigen::Index>(row)) = w;
    }
    const Eigen::VectorXd diff = alpha - particular;
    if (kernel.cols() == 0) {
        return diff.cwiseAbs().maxCoeff() <= tol;
    }
    const Eigen::VectorXd coeffs = kernel.colPivHouseholderQr().solve(diff);
    return (kernel * coeffs - diff).cwiseAbs().maxCoeff() <= tol;
}

PaddingSolutionSpace solve_valid_paddings(const PauliSubspace &pf) {
    const size_t n = pf.num_qubits();
    if (n > 3) {
        throw ResourceError("solve_valid_paddings limited to 3 qubits");
    }
    const Eigen::MatrixXd a = hiding_equations(pf);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(a.rows());
    rhs(0) = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    PaddingSolutionSpace out;
    out.n = n;
    // The uniform padding always satisfies the equalities; use it as the base point.
    out.particular = Eigen::VectorXd::Constant(a.cols(), 1.0 / static_cast<double>(a.cols()));
    out.residual = (a * out.particular - rhs).cwiseAbs().maxCoeff();
    if (out.residual > 1e-10) {
        throw InvariantViolation("uniform padding violates the hiding equations");
    }
    out.particular_nonnegative = (out.particular.array() >= 0).all();
    if (lu.dimensionOfKernel() > 0) {
        out.kernel = lu.kernel();
    } else {
        out.kernel = Eigen::MatrixXd(a.cols(), 0);
    }
    return out;
}

}  // namespace blindgate

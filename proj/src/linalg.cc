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

#include "blindgate/linalg.h"

#include <cmath>
#include <numbers>

#include "blindgate/errors.h"

namespace blindgate {

double max_abs(const Matrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_unitary(const Matrix &u, double tol) {
    if (u.rows() != u.cols()) {
        return false;
    }
    return max_abs(u * u.adjoint() - Matrix::Identity(u.rows(), u.cols())) <= tol;
}

bool is_hermitian(const Matrix &m, double tol) {
    return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix embed(const Matrix &op, std::span<const size_t> targets, size_t num_qubits) {
    const size_t k = targets.size();
    if (op.rows() != (Eigen::Index{1} << k) || op.cols() != op.rows()) {
        throw DimensionError("embed: operator size does not match target count");
    }
    uint64_t mask = 0;
    for (size_t q : targets) {
        if (q >= num_qubits) {
            throw DimensionError("embed: target out of range");
        }
        uint64_t bit = qubit_bit(q, num_qubits);
        if (mask & bit) {
            throw DimensionError("embed: repeated target");
        }
        mask |= bit;
    }
    const uint64_t dim = uint64_t{1} << num_qubits;
    auto spread = [&](uint64_t local) {
        uint64_t out = 0;
        for (size_t j = 0; j < k; j++) {
            if ((local >> (k - 1 - j)) & 1) {
                out |= qubit_bit(targets[j], num_qubits);
            }
        }
        return out;
    };
    Matrix out = Matrix::Zero(dim, dim);
    for (uint64_t rest = 0; rest < dim; rest++) {
        if (rest & mask) {
            continue;
        }
        for (uint64_t r = 0; r < (uint64_t{1} << k); r++) {
            for (uint64_t c = 0; c < (uint64_t{1} << k); c++) {
                out(rest | spread(r), rest | spread(c)) = op(r, c);
            }
        }
    }
    return out;
}

double trace_distance(const Matrix &a, const Matrix &b) {
    Matrix d = a - b;
    d = 0.5 * (d + d.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(d, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double fidelity(const Vector &a, const Vector &b) {
    if (a.size() != b.size()) {
        throw DimensionError("fidelity: vector sizes differ");
    }
    return std::norm(a.dot(b));
}

bool equal_up_to_global_phase(const Vector &a, const Vector &b, double tol) {
    return fidelity(a, b) >= 1.0 - tol;
}

bool matrices_equal_up_to_phase(const Matrix &a, const Matrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    Eigen::Index bi = 0, bj = 0;
    b.cwiseAbs().maxCoeff(&bi, &bj);
    if (std::abs(b(bi, bj)) <= tol) {
        return max_abs(a) <= tol;
    }
    Complex ratio = a(bi, bj) / b(bi, bj);
    if (std::abs(std::abs(ratio) - 1.0) > tol) {
        return false;
    }
    return max_abs(a - ratio * b) <= tol;
}

double phase_aligned_distance(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("phase_aligned_distance: shape mismatch");
    }
    Eigen::Index bi = 0, bj = 0;
    b.cwiseAbs().maxCoeff(&bi, &bj);
    Complex phase{1.0, 0.0};
    if (std::abs(a(bi, bj)) > 0.0 && std::abs(b(bi, bj)) > 0.0) {
        phase = a(bi, bj) / b(bi, bj);
        phase /= std::abs(phase);
    }
    return max_abs(a - phase * b);
}

Matrix exp_i_hermitian(const Matrix &h) {
    Matrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    Vector phases = (kI * solver.eigenvalues().cast<Complex>()).array().exp();
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

namespace gates {

Matrix identity(size_t num_qubits) {
    return Matrix::Identity(Eigen::Index{1} << num_qubits, Eigen::Index{1} << num_qubits);
}

Matrix x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix y() {
    Matrix m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

Matrix z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix h() {
    Matrix m(2, 2);
    m << 1, 1, 1, -1;
    return m / std::numbers::sqrt2;
}

Matrix s() {
    Matrix m(2, 2);
    m << 1, 0, 0, kI;
    return m;
}

Matrix sdg() {
    return s().adjoint();
}

Matrix t() {
    Matrix m(2, 2);
    m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4);
    return m;
}

Matrix rz(double theta) {
    Matrix m(2, 2);
    m << 1, 0, 0, std::polar(1.0, theta);
    return m;
}

Matrix rx(double theta) {
    return h() * rz(theta) * h();
}

Matrix cx() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
    return m;
}

Matrix cz() {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = -1;
    return m;
}

Matrix swap() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
    return m;
}

}  // namespace gates

}  // namespace blindgate

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

#ifndef BLINDGATE_LINALG_H
#define BLINDGATE_LINALG_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

namespace blindgate {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Dense matrices and amplitude vectors index qubit 0 as the most significant bit.
inline constexpr uint64_t qubit_bit(size_t qubit, size_t num_qubits) {
    return uint64_t{1} << (num_qubits - 1 - qubit);
}

double max_abs(const Matrix &m);
bool is_unitary(const Matrix &u, double tol = 1e-10);
bool is_hermitian(const Matrix &m, double tol = 1e-10);

Matrix kron(const Matrix &a, const Matrix &b);

/// Lifts `op`, acting on `targets` in the given order, to a `num_qubits` register.
Matrix embed(const Matrix &op, std::span<const size_t> targets, size_t num_qubits);

/// Half the trace norm of a Hermitian difference.
double trace_distance(const Matrix &a, const Matrix &b);

/// |<a|b>|^2 for unit vectors.
double fidelity(const Vector &a, const Vector &b);

/// True iff |<a|b>|^2 >= 1 - tol. Inputs are assumed normalised.
bool equal_up_to_global_phase(const Vector &a, const Vector &b, double tol = 1e-9);

/// True iff a = e^{i phi} b entrywise within `tol`.
bool matrices_equal_up_to_phase(const Matrix &a, const Matrix &b, double tol = 1e-9);

/// min over phi of max |a - e^{i phi} b|, with phi taken from b's largest entry.
double phase_aligned_distance(const Matrix &a, const Matrix &b);

/// exp(iH) for Hermitian H via its eigendecomposition.
Matrix exp_i_hermitian(const Matrix &h);

namespace gates {

Matrix identity(size_t num_qubits);
Matrix x();
Matrix y();
Matrix z();
Matrix h();
Matrix s();
Matrix sdg();
Matrix t();
/// diag(1, e^{i theta}).
Matrix rz(double theta);
/// H rz(theta) H, the X-axis counterpart of `rz`.
Matrix rx(double theta);
/// Control on the first qubit, target on the second.
Matrix cx();
Matrix cz();
Matrix swap();

}  // namespace gates

}  // namespace blindgate

#endif

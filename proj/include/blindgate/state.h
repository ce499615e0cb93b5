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

#ifndef BLINDGATE_STATE_H
#define BLINDGATE_STATE_H

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "blindgate/linalg.h"
#include "blindgate/pauli.h"
#include "blindgate/rng.h"

namespace blindgate {

struct Register {
    std::string name;
    size_t qubits = 0;

    bool operator==(const Register &) const = default;
};

using Layout = std::vector<Register>;

/// Dense pure state or density matrix. Registers are laid out in order and qubit 0
/// (first qubit of the first register) is the most significant bit of the index.
class QuantumState {
  public:
    static constexpr size_t kMaxPureQubits = 14;
    static constexpr size_t kMaxMixedQubits = 10;

    QuantumState() = default;

    static QuantumState pure(Layout layout, Vector amplitudes);
    static QuantumState mixed(Layout layout, Matrix rho);
    static QuantumState zero(Layout layout);

    bool is_pure() const { return std::holds_alternative<Vector>(data_); }
    size_t num_qubits() const { return num_qubits_; }
    size_t dim() const { return size_t{1} << num_qubits_; }
    const Layout &layout() const { return layout_; }

    /// Absolute qubit indices of a register.
    std::vector<size_t> qubits_of(std::string_view name) const;
    bool has_register(std::string_view name) const;

    /// Throws if the state is mixed.
    const Vector &vector() const;
    Matrix density() const;
    QuantumState to_mixed() const;

  private:
    QuantumState(Layout layout, std::variant<Vector, Matrix> data);

    Layout layout_;
    size_t num_qubits_ = 0;
    std::variant<Vector, Matrix> data_;
};

QuantumState tensor(const QuantumState &a, const QuantumState &b);

/// Orthonormal basis given by the columns of a unitary.
class MeasurementBasis {
  public:
    explicit MeasurementBasis(Matrix columns, double tol = 1e-10);
    static MeasurementBasis computational(size_t qubits);

    const Matrix &columns() const { return columns_; }
    size_t size() const { return static_cast<size_t>(columns_.cols()); }

  private:
    Matrix columns_;
};

QuantumState apply_unitary(const QuantumState &state, std::span<const size_t> targets, const Matrix &u);

/// |0><0| (x) I + |1><1| (x) p on (control, targets...).
QuantumState apply_controlled_pauli(const QuantumState &state, size_t control, const PauliString &p,
                                    std::span<const size_t> targets);

struct MeasurementResult {
    size_t outcome = 0;
    double probability = 0.0;
    /// State of the unmeasured qubits; measured qubits are removed from the layout.
    QuantumState state;
};

MeasurementResult measure_in_basis(const QuantumState &state, std::span<const size_t> targets,
                                   const MeasurementBasis &basis, Rng &rng);
/// Forced-outcome variant. Throws ValidationError when the outcome has zero probability.
MeasurementResult measure_in_basis(const QuantumState &state, std::span<const size_t> targets,
                                   const MeasurementBasis &basis, size_t forced_outcome);
/// Every outcome with probability above 1e-14, in outcome order.
std::vector<MeasurementResult> measurement_branches(const QuantumState &state, std::span<const size_t> targets,
                                                    const MeasurementBasis &basis);

/// Reduced density matrix on the named registers (kept in layout order).
QuantumState partial_trace(const QuantumState &state, std::span<const std::string> keep);

/// Entropy in bits. Eigenvalues below 1e-12 count as zero.
double von_neumann_entropy(const Matrix &rho);
double von_neumann_entropy(const QuantumState &state);

void validate_density_matrix(const Matrix &rho, double tol = 1e-10);

bool equal_up_to_global_phase(const QuantumState &a, const QuantumState &b, double tol = 1e-9);

QuantumState random_state(Layout layout, Rng &rng);
/// Register "psi" of n qubits maximally entangled with a register "ref" of n qubits.
QuantumState entangled_reference_state(size_t n);

}  // namespace blindgate

#endif

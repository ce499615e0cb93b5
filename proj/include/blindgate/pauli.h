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

#ifndef BLINDGATE_PAULI_H
#define BLINDGATE_PAULI_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blindgate/gf2.h"
#include "blindgate/linalg.h"

namespace blindgate {

/// Symplectic rows pack a Pauli's x bits in columns [0, n) and z bits in [n, 2n); qubit q is bit q.
inline uint64_t symplectic_row(size_t n, uint64_t x, uint64_t z) {
    return x | (z << n);
}

inline uint64_t low_mask(size_t n) {
    return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

/// a^T Omega b for rows a, b of length 2n.
inline bool symplectic_inner(size_t n, uint64_t a, uint64_t b) {
    const uint64_t m = low_mask(n);
    return parity(((a & m) & (b >> n)) ^ ((a >> n) & (b & m)));
}

/// Omega v: swaps the x and z halves.
inline uint64_t omega(size_t n, uint64_t row) {
    const uint64_t m = low_mask(n);
    return ((row & m) << n) | (row >> n);
}

/// Moves qubit-indexed bits (qubit q is bit q) to amplitude-index bits (qubit 0 most significant).
uint64_t amplitude_mask(uint64_t qubit_bits, size_t n);

/// Column visiting order x_0, z_0, x_1, z_1, ... used for canonical subspace bases.
std::vector<size_t> qubit_major_order(size_t n);

inline Complex i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

/// i^phase times the tensor product of sigma(x_q, z_q), with sigma(1,1) = Y.
/// Phase 0 is the Hermitian representative i^{x.z} X_x Z_z.
class PauliString {
  public:
    static constexpr size_t kMaxQubits = 32;
    static constexpr size_t kMaxDenseQubits = 12;

    PauliString() = default;
    explicit PauliString(size_t n, uint64_t x = 0, uint64_t z = 0, int phase = 0);

    static PauliString from_row(size_t n, uint64_t row, int phase = 0);
    /// Single-qubit factor `kind` in {'I','X','Y','Z'} on `qubit`.
    static PauliString single(size_t n, size_t qubit, char kind);
    /// Parses "[+|-|+i|-i]" followed by n letters from {I,X,Y,Z}; letter q acts on qubit q.
    static PauliString parse(std::string_view text);

    size_t num_qubits() const { return n_; }
    uint64_t x() const { return x_; }
    uint64_t z() const { return z_; }
    int phase() const { return phase_; }
    uint64_t row() const { return symplectic_row(n_, x_, z_); }
    char letter(size_t qubit) const;

    bool is_identity_up_to_phase() const { return (x_ | z_) == 0; }
    bool is_hermitian() const { return phase_ % 2 == 0; }
    size_t weight() const { return std::popcount(x_ | z_); }

    PauliString with_phase(int phase) const { return PauliString(n_, x_, z_, phase); }
    PauliString canonical() const { return with_phase(0); }

    bool operator==(const PauliString &) const = default;

    std::string str() const;

  private:
    size_t n_ = 0;
    uint64_t x_ = 0;
    uint64_t z_ = 0;
    int phase_ = 0;
};

PauliString operator*(const PauliString &a, const PauliString &b);
PauliString multiply(const PauliString &a, const PauliString &b);

/// 0 if the operators commute, 1 if they anti-commute.
bool commutator(const PauliString &a, const PauliString &b);

/// Operator with each qubit register tensored: a on the first a.n qubits, b on the rest.
PauliString tensor(const PauliString &a, const PauliString &b);

Matrix dense_matrix(const PauliString &p);

/// Recognises m as a phase-exact Pauli string, or nullopt. Tolerance is entrywise.
std::optional<PauliString> pauli_from_dense(const Matrix &m, double tol = 1e-9);

}  // namespace blindgate

#endif

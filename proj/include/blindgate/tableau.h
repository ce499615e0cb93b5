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

#ifndef BLINDGATE_TABLEAU_H
#define BLINDGATE_TABLEAU_H

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "blindgate/gf2.h"
#include "blindgate/linalg.h"
#include "blindgate/pauli.h"
#include "blindgate/rng.h"

namespace blindgate {

/// Clifford unitary C up to global phase, stored as the Hermitian images C X_q C^dagger and C Z_q C^dagger.
class CliffordTableau {
  public:
    static constexpr size_t kMaxDenseQubits = 10;

    CliffordTableau() = default;
    CliffordTableau(std::vector<PauliString> x_images, std::vector<PauliString> z_images);
    static CliffordTableau identity(size_t n);
    /// Throws NotCliffordError if some generator is not mapped to a Pauli string.
    static CliffordTableau from_dense(const Matrix &u);
    /// Uniform symplectic part with independent random signs.
    static CliffordTableau random(size_t n, Rng &rng);

    size_t num_qubits() const { return x_images_.size(); }
    const PauliString &x_image(size_t q) const { return x_images_.at(q); }
    const PauliString &z_image(size_t q) const { return z_images_.at(q); }

    /// Row k is the image row of generator k (X_k for k < n, Z_{k-n} otherwise).
    Gf2Matrix symplectic() const;
    bool is_symplectic() const;

    PauliString conjugate(const PauliString &p) const;
    /// The Clifford `next` * this.
    CliffordTableau then(const CliffordTableau &next) const;
    CliffordTableau inverse() const;
    /// Dense unitary with the first nonzero entry of column 0 real and positive.
    Matrix to_dense() const;

    bool operator==(const CliffordTableau &) const = default;
    std::string str() const;

  private:
    std::vector<PauliString> x_images_;
    std::vector<PauliString> z_images_;
};

PauliString conjugate_pauli(const CliffordTableau &c, const PauliString &p);

/// A Clifford C with C s_i C^dagger = t_i exactly (phases included). Sources and targets must be
/// Hermitian, independent, and have identical pairwise commutators.
CliffordTableau clifford_mapping(std::span<const PauliString> sources, std::span<const PauliString> targets);

}  // namespace blindgate

#endif

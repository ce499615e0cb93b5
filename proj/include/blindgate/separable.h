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


#ifndef BLINDGATE_SEPARABLE_H
#define BLINDGATE_SEPARABLE_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "blindgate/linalg.h"
#include "blindgate/pauli.h"
#include "blindgate/protocols.h"
#include "blindgate/tableau.h"

namespace blindgate {

/// Independent, mutually commuting Hermitian generators (signs carried in the phase).
class StabilizerGroup {
  public:
    StabilizerGroup(size_t m, std::vector<PauliString> generators);

    size_t num_qubits() const { return m_; }
    size_t size() const { return generators_.size(); }
    const std::vector<PauliString> &generators() const { return generators_; }
    /// All 2^k elements with their signs.
    std::vector<PauliString> elements() const;
    std::string str() const;

  private:
    size_t m_;
    std::vector<PauliString> generators_;
};

/// Stabilizer group of |phi_U> (or its conjugate) for a Clifford U. Throws NotCliffordError otherwise.
StabilizerGroup stabilizers_of_phi(const Matrix &u_cl, const BasisB &b, const StandardTransform &st,
                                   bool conjugated = false);

/// True when some non-identity element, sign included, lies in both groups.
bool shares_stabilizer(const StabilizerGroup &g, const StabilizerGroup &h);
/// Dimension of the phase-blind intersection of the two generated groups.
size_t unsigned_intersection_dim(const StabilizerGroup &g, const StabilizerGroup &h);

/// V with V^dagger g_i V = Z_i and V^dagger h^_i V = X_i, where h^ is h reduced so that c(g_i, h^_j) = delta_ij.
CliffordTableau separable_v(const StabilizerGroup &g, const StabilizerGroup &h);

/// The RM choice of V that makes Alice's bases product Z (for I) and product X (for u_cl) eigenbases.
Matrix separable_measurement_v(const ProtocolContext &ctx, const Matrix &u_cl);

struct FreeGate {
    /// One letter per measured qubit, e.g. "XY".
    std::string bases;
    /// Catalog name such as "cZ_12*S_2", or the tableau text when no catalog entry matches.
    std::string name;
    bool cataloged = false;
    Matrix unitary;
};

/// Every tuple of single-qubit X/Y/Z measurements for which all outcome branches of the RM protocol with
/// the given V implement one gate up to a Pauli.
std::vector<FreeGate> enumerate_free_gates(const ProtocolContext &ctx, const Matrix &v);

/// Products of S_i and cZ_ij on n qubits, named as in enumerate_free_gates.
std::vector<std::pair<std::string, Matrix>> phase_gate_catalog(size_t n);

/// Catalog name of u up to Pauli and global phase.
std::optional<std::string> catalog_name(const Matrix &u);

}  // namespace blindgate

#endif

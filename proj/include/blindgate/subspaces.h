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

#ifndef BLINDGATE_SUBSPACES_H
#define BLINDGATE_SUBSPACES_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "blindgate/gf2.h"
#include "blindgate/linalg.h"
#include "blindgate/pauli.h"

namespace blindgate {

/// Continuous one-parameter gate, sampled at `probes` wherever a finite member list is needed.
struct ParametrizedGate {
    std::function<Matrix(double)> build;
    std::string label;
    std::vector<double> probes;
};

/// Eight points of the base-2 van der Corput sequence scaled to [0, 2 pi).
std::vector<double> default_probes();

/// Gates indexed by the choice d; gate 0 is the identity.
class GateFamily {
  public:
    static constexpr size_t kMaxQubits = 5;

    GateFamily(size_t n, std::vector<Matrix> gates, std::vector<std::string> labels = {});
    /// Identity followed by `gate` at each probe value.
    static GateFamily parametrized(size_t n, ParametrizedGate gate);

    size_t num_qubits() const { return n_; }
    size_t size() const { return gates_.size(); }
    const Matrix &gate(size_t d) const;
    const std::vector<Matrix> &gates() const { return gates_; }
    const std::vector<std::string> &labels() const { return labels_; }

    bool is_parametrized() const { return param_.has_value(); }
    const std::optional<ParametrizedGate> &parameter() const { return param_; }
    Matrix instantiate(double theta) const;

    /// Applies `f` to every gate, including future instantiations of the parametrized gate.
    GateFamily transformed(const std::function<Matrix(const Matrix &)> &f) const;

    /// Distribution Alice uses for d. Uniform unless set.
    const std::vector<double> &weights() const { return weights_; }
    void set_weights(std::vector<double> weights);

  private:
    size_t n_;
    std::vector<Matrix> gates_;
    std::vector<std::string> labels_;
    std::vector<double> weights_;
    std::optional<ParametrizedGate> param_;
};

/// Span of Pauli rows, stored as a qubit-major reduced echelon basis (unique per subspace).
class PauliSubspace {
  public:
    PauliSubspace(size_t n, const Gf2Matrix &rows);
    static PauliSubspace trivial(size_t n);
    static PauliSubspace full(size_t n);

    size_t num_qubits() const { return n_; }
    size_t dim() const { return generators_.rows(); }
    const Gf2Matrix &generators() const { return generators_; }
    std::vector<PauliString> generator_paulis() const;
    /// Phase-blind membership.
    bool contains(uint64_t row) const;
    bool contains(const PauliString &p) const { return contains(p.row()); }
    std::vector<uint64_t> elements() const;

    bool operator==(const PauliSubspace &) const = default;

  private:
    size_t n_;
    Gf2Matrix generators_;
};

/// Coefficients Tr(P_y^dagger U) / 2^n, indexed by the symplectic row y.
struct PauliDecomposition {
    size_t n = 0;
    std::vector<Complex> coefficients;

    Complex operator[](uint64_t row) const { return coefficients[row]; }
    Matrix reconstruct() const;
};

PauliDecomposition pauli_decompose(const Matrix &u, size_t n);

/// s with U P U^dagger = (-1)^s P, or nullopt when P is not mapped to +-P.
std::optional<bool> conjugation_sign(const Matrix &u, const PauliString &p, double tol = 1e-10);

PauliSubspace preserved_subspace(const GateFamily &family);

/// The row y for which P_y U commutes with every generator of `pf`: the
/// lexicographically smallest solution, comparing x_0 ... x_{n-1} z_0 ... z_{n-1}.
uint64_t adjustment_row(const Matrix &u, const PauliSubspace &pf);
Matrix adjust_gate(const Matrix &u, const PauliSubspace &pf);
GateFamily adjust_family(const GateFamily &family, const PauliSubspace &pf);

/// Ordered generators B_1 ... B_m of the commutant of P_F (m = 2n - r).
/// The element with index x is B_1^{x_1} ... B_m^{x_m}, where x_1 is the most significant bit.
class BasisB {
  public:
    BasisB(size_t n, size_t r, std::vector<PauliString> paulis);

    size_t num_qubits() const { return n_; }
    size_t r() const { return r_; }
    size_t size() const { return paulis_.size(); }
    const std::vector<PauliString> &paulis() const { return paulis_; }
    /// c_i with bit j (j < i) equal to c(B_i, B_j); bit j means generator index j.
    const std::vector<uint64_t> &c_vectors() const { return c_vectors_; }
    /// c_i as a basis index (bit m-1-j for generator j).
    uint64_t c_index(size_t i) const;

    PauliString element(uint64_t index) const;
    Matrix dense_element(uint64_t index) const { return dense_matrix(element(index)); }
    uint64_t num_elements() const { return uint64_t{1} << paulis_.size(); }

  private:
    size_t n_;
    size_t r_;
    std::vector<PauliString> paulis_;
    std::vector<uint64_t> c_vectors_;
};

BasisB support_basis(const PauliSubspace &pf);

/// Q_1 ... Q_m with c(Q_i, B_j) = delta_ij; Q_y uses the same index convention as B.
class DualBasisQ {
  public:
    DualBasisQ(size_t n, std::vector<PauliString> paulis) : n_(n), paulis_(std::move(paulis)) {}

    size_t num_qubits() const { return n_; }
    size_t size() const { return paulis_.size(); }
    const std::vector<PauliString> &paulis() const { return paulis_; }
    PauliString element(uint64_t index) const;

  private:
    size_t n_;
    std::vector<PauliString> paulis_;
};

DualBasisQ dual_basis(const BasisB &b);

/// gamma_x with u = sum_x gamma_x B_x. Throws UnsupportedGateError if u is not spanned by B.
std::vector<Complex> decompose_in_b(const Matrix &u, const BasisB &b, double tol = 1e-10);

struct FamilyAnalysis {
    PauliSubspace pf;
    GateFamily adjusted;
    BasisB b;
    DualBasisQ q;
    /// Row y applied to each gate during adjustment.
    std::vector<uint64_t> adjustments;

    size_t cost() const { return b.size(); }
};

FamilyAnalysis analyze_family(const GateFamily &family);

}  // namespace blindgate

#endif

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

#ifndef BLINDGATE_PROTOCOLS_H
#define BLINDGATE_PROTOCOLS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blindgate/linalg.h"
#include "blindgate/pauli.h"
#include "blindgate/rng.h"
#include "blindgate/state.h"
#include "blindgate/subspaces.h"
#include "blindgate/tableau.h"

namespace blindgate {

/// Clifford on max(n, m) qubits with V (B_i (x) I) V^dagger = X_i Z_{c_i}.
struct StandardTransform {
    size_t n = 0;
    size_t m = 0;
    size_t width = 0;
    CliffordTableau tableau;
    Matrix dense;
    /// X_i Z_{c_i} on `width` qubits, one per generator of B.
    std::vector<PauliString> images;
};

StandardTransform standard_transformation(const BasisB &b);

/// |phi_U> = sum_z gamma_z |z> on m qubits (complex conjugated amplitudes when `conjugated`).
struct PhiState {
    Vector amplitudes;
    bool conjugated = false;
};

/// Builds the state from the B decomposition and cross-checks it against V_st U V_st^dagger |0>.
PhiState phi_state(const Matrix &u, const BasisB &b, const StandardTransform &st, bool conjugated = false);

/// Everything the protocols need about a family's support basis.
struct ProtocolContext {
    BasisB b;
    DualBasisQ q;
    StandardTransform st;

    static ProtocolContext from(const FamilyAnalysis &analysis);
    size_t n() const { return b.num_qubits(); }
    size_t m() const { return b.size(); }
};

enum class Mode { kReceiveMeasure, kPrepareSendTwoRound, kPrepareSendSingleRound };
std::string mode_name(Mode mode);

enum class Direction { kBobToAlice, kAliceToBob };

struct Round {
    Direction direction = Direction::kBobToAlice;
    size_t qubits = 0;
    std::vector<std::string> classical;
    std::optional<uint64_t> outcome;
};

struct ProtocolTranscript {
    Mode mode = Mode::kReceiveMeasure;
    std::vector<Round> rounds;
    /// Final padding applied on top of the target gate, as Alice knows it.
    std::optional<PauliString> padding;

    size_t qubits_sent() const;
    size_t alice_to_bob_messages() const;
};

struct RmResult {
    ProtocolTranscript transcript;
    QuantumState bob_state;
    uint64_t outcome = 0;
    double probability = 0.0;
    std::vector<double> outcome_probabilities;
    /// |<expected|final>|^2 with expected = (B_z U (x) I)|psi>; pure inputs only.
    std::optional<double> fidelity;
};

/// Columns z = V |phi*_{B_z U}>.
Matrix rm_measurement_basis(const ProtocolContext &ctx, const Matrix &u, const Matrix &v);

/// Bob's state |Psi'> = sum_x V|x> (x) B_x |psi> / sqrt(2^m), before Alice measures. Alice's
/// register "alice" comes first. `psi` must contain an n-qubit register named "psi".
QuantumState rm_prepare(const ProtocolContext &ctx, const Matrix &v, const QuantumState &psi);

RmResult run_rm(const ProtocolContext &ctx, const Matrix &u, const Matrix &v, const QuantumState &psi, Rng &rng,
                std::optional<uint64_t> forced_outcome = std::nullopt);

struct BlindnessRecord {
    std::string label;
    double max_distance = 0.0;
};

struct BlindnessReport {
    bool pass = true;
    double max_distance = 0.0;
    double max_outcome_deviation = 0.0;
    std::vector<BlindnessRecord> records;
};

/// For each input, Bob's state averaged over Alice's outcomes must be the same for every gate
/// and equal sum_x B_x rho B_x^dagger / 2^m (tolerance 1e-10).
BlindnessReport verify_blindness_rm(const ProtocolContext &ctx, const std::vector<Matrix> &gates, const Matrix &v,
                                    const std::vector<QuantumState> &inputs);

struct Ps2Options {
    std::optional<uint64_t> a;
    std::optional<uint64_t> b;
    std::optional<uint64_t> x;
    /// Outcome Bob measures (forced branch).
    std::optional<uint64_t> measured_y;
    /// Value Bob reports instead of his outcome.
    std::optional<uint64_t> reported_y;
};

struct Ps2Result {
    ProtocolTranscript transcript;
    QuantumState bob_state;
    uint64_t a = 0, b = 0, x = 0, y = 0, reported_y = 0;
    Matrix sent_unitary;
    Matrix lambda;
    /// Max-norm gap between the pre-measurement state and sum_y |y> Q_y U Q_y^dagger |psi> / sqrt(2^m).
    double intermediate_deviation = 0.0;
    /// Max-norm gap between Lambda Q_y U Q_y^dagger and B_x U_hat, up to global phase.
    double lambda_deviation = 0.0;
    std::optional<double> fidelity;
};

/// Alice's random member B_a Q_b U_hat Q_b^dagger of the extended family.
Matrix ps_extended_member(const ProtocolContext &ctx, const Matrix &u_hat, uint64_t a, uint64_t b);

Ps2Result run_ps_two_round(const ProtocolContext &ctx, const Matrix &u_hat, const QuantumState &psi, Rng &rng,
                           const Ps2Options &options = {});

struct PsBlindnessReport {
    bool pass = true;
    double max_gram_deviation = 0.0;
    double max_mixture_deviation = 0.0;
    double max_cross_gate_distance = 0.0;
    size_t cases = 0;
};

/// For every target and forced y: the states |phi_{U(x)}> with U(x) = Q_y^dagger Lambda^dagger B_x U_hat Q_y
/// are orthonormal and their uniform mixture is I / 2^m.
PsBlindnessReport verify_blindness_ps(const ProtocolContext &ctx, const std::vector<Matrix> &targets,
                                      const std::vector<uint64_t> &forced_y, Rng &rng);

struct Ps1Result {
    ProtocolTranscript transcript;
    QuantumState bob_state;
    uint64_t x = 0, y = 0;
    PauliString predicted_padding;
    std::optional<double> fidelity;
};

/// Single-round variant for Clifford targets. Alice sends V_p |phi_{B_x U_hat}>, Bob undoes V_p.
Ps1Result run_ps_single_round(const ProtocolContext &ctx, const Matrix &u_hat, const Matrix &v_p,
                              const QuantumState &psi, Rng &rng, std::optional<uint64_t> forced_x = std::nullopt,
                              std::optional<uint64_t> forced_y = std::nullopt);

/// Padding Q_y B_x (U_hat Q_y^dagger U_hat^dagger) for a Clifford target.
PauliString single_round_padding(const ProtocolContext &ctx, const CliffordTableau &u_hat, uint64_t x, uint64_t y);

// Entropy accounting from Bob's perspective.

struct LedgerStage {
    std::string label;
    /// Expected entropy of Bob's state after this stage.
    double entropy = 0.0;
    /// Qubits exchanged in the round leading to this stage (0 for the initial stage).
    size_t qubits = 0;
};

struct LedgerRow {
    std::string label;
    double s_before = 0.0;
    size_t qubits = 0;
    double s_after = 0.0;
    double slack = 0.0;
    bool pass = true;
};

struct EntropyLedger {
    std::vector<LedgerRow> rows;
    double cumulative_slack = 0.0;
    bool pass = true;
};

/// Checks s_k + N_{k+1} >= s_{k+1} per round and s_0 + sum N >= s_final, with slack -1e-8.
EntropyLedger entropy_ledger(const std::vector<LedgerStage> &stages);

std::vector<LedgerStage> rm_ledger_stages(const ProtocolContext &ctx, const Matrix &u, const Matrix &v,
                                          const QuantumState &input);
std::vector<LedgerStage> ps2_ledger_stages(const ProtocolContext &ctx, const Matrix &u_hat, const QuantumState &input);

/// 2^{-2n} prod_{i>r} (I + P'_i (x) P'_i), where P'_{r+1..2n} extend a basis of P_F.
Matrix special_rho(const PauliSubspace &pf);

struct ResourceBoundReport {
    size_t n = 0;
    size_t r = 0;
    size_t bound = 0;
    size_t cost = 0;
    double rho_entropy = 0.0;
    double final_entropy = 0.0;
    double max_average_deviation = 0.0;
    double max_branch_deviation = 0.0;
    std::vector<double> outcome_probabilities;
    bool pass = true;
};

/// Runs the identity gate on the special state and checks the entropy witness.
ResourceBoundReport resource_bound_experiment(const FamilyAnalysis &analysis, const Matrix &v);

}  // namespace blindgate

#endif

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


#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "blindgate/errors.h"
#include "blindgate/protocols.h"

namespace blindgate {

namespace {

std::vector<size_t> qubit_range(size_t start, size_t count) {
    std::vector<size_t> out(count);
    std::iota(out.begin(), out.end(), start);
    return out;
}

Matrix hadamard_layer(size_t m) {
    Matrix out = gates::identity(0);
    for (size_t i = 0; i < m; i++) {
        out = kron(out, gates::h());
    }
    return out;
}

std::string bits(uint64_t value, size_t m) {
    std::string out(m, '0');
    for (size_t i = 0; i < m; i++) {
        if ((value >> (m - 1 - i)) & 1) {
            out[i] = '1';
        }
    }
    return out;
}

void check_context(const ProtocolContext &ctx) {
    if (ctx.m() == 0) {
        throw ValidationError("family needs no communication; the support basis is empty");
    }
}

void check_input(const ProtocolContext &ctx, const QuantumState &psi, std::string_view reserved) {
    if (!psi.has_register("psi") || psi.qubits_of("psi").size() != ctx.n()) {
        throw DimensionError("input needs a register \"psi\" with " + std::to_string(ctx.n()) + " qubits");
    }
    if (psi.has_register(reserved)) {
        throw ValidationError("input may not contain a register named \"" + std::string(reserved) + "\"");
    }
}

void check_gate(const ProtocolContext &ctx, const Matrix &u, size_t qubits, const char *what) {
    const Eigen::Index dim = Eigen::Index{1} << qubits;
    if (u.rows() != dim || u.cols() != dim) {
        throw DimensionError(std::string(what) + " has the wrong dimension");
    }
    if (!is_unitary(u, 1e-10)) {
        throw ValidationError(std::string(what) + " is not unitary");
    }
    (void)ctx;
}

// Controlled B_{i+1} from qubit offset+i onto the psi register, applied for i = m-1 down to 0.
QuantumState apply_ladder(const ProtocolContext &ctx, QuantumState state, size_t offset) {
    const std::vector<size_t> targets = state.qubits_of("psi");
    for (size_t i = ctx.m(); i-- > 0;) {
        state = apply_controlled_pauli(state, offset + i, ctx.b.paulis()[i], targets);
    }
    return state;
}

QuantumState apply_on_psi(const QuantumState &state, const Matrix &u) {
    return apply_unitary(state, state.qubits_of("psi"), u);
}

std::optional<double> pure_fidelity(const QuantumState &actual, const QuantumState &expected) {
    if (!actual.is_pure() || !expected.is_pure()) {
        return std::nullopt;
    }
    return fidelity(actual.vector(), expected.vector());
}

Matrix pauli_channel_average(const ProtocolContext &ctx, const QuantumState &input) {
    const std::vector<size_t> targets = input.qubits_of("psi");
    const QuantumState mixed = input.to_mixed();
    Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(input.dim()), static_cast<Eigen::Index>(input.dim()));
    for (uint64_t x = 0; x < ctx.b.num_elements(); x++) {
        sum += apply_unitary(mixed, targets, ctx.b.dense_element(x)).density();
    }
    return sum / static_cast<double>(ctx.b.num_elements());
}

Matrix sandwich(const ProtocolContext &ctx, const Matrix &u, uint64_t y) {
    const Matrix qy = dense_matrix(ctx.q.element(y));
    return qy * u * qy.adjoint();
}

}  // namespace

// Receive and measure.

Matrix rm_measurement_basis(const ProtocolContext &ctx, const Matrix &u, const Matrix &v) {
    check_context(ctx);
    check_gate(ctx, u, ctx.n(), "gate");
    check_gate(ctx, v, ctx.m(), "V");
    const uint64_t count = ctx.b.num_elements();
    Matrix basis(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(count));
    for (uint64_t z = 0; z < count; z++) {
        const PhiState phi = phi_state(ctx.b.dense_element(z) * u, ctx.b, ctx.st, true);
        basis.col(static_cast<Eigen::Index>(z)) = v * phi.amplitudes;
    }
    return basis;
}

QuantumState rm_prepare(const ProtocolContext &ctx, const Matrix &v, const QuantumState &psi) {
    check_context(ctx);
    check_input(ctx, psi, "alice");
    check_gate(ctx, v, ctx.m(), "V");
    const size_t m = ctx.m();
    const Vector plus = Vector::Constant(Eigen::Index{1} << m, Complex{std::pow(2.0, -0.5 * m), 0.0});
    QuantumState state = tensor(QuantumState::pure({{"alice", m}}, plus), psi);
    state = apply_ladder(ctx, std::move(state), 0);
    return apply_unitary(state, qubit_range(0, m), v);
}

RmResult run_rm(const ProtocolContext &ctx, const Matrix &u, const Matrix &v, const QuantumState &psi, Rng &rng,
                std::optional<uint64_t> forced_outcome) {
    const QuantumState prepared = rm_prepare(ctx, v, psi);
    const MeasurementBasis basis(rm_measurement_basis(ctx, u, v));
    const std::vector<size_t> alice = qubit_range(0, ctx.m());

    RmResult result;
    result.outcome_probabilities.assign(ctx.b.num_elements(), 0.0);
    for (const MeasurementResult &branch : measurement_branches(prepared, alice, basis)) {
        result.outcome_probabilities[branch.outcome] = branch.probability;
    }
    MeasurementResult measured = forced_outcome ? measure_in_basis(prepared, alice, basis, *forced_outcome)
                                                : measure_in_basis(prepared, alice, basis, rng);
    result.outcome = measured.outcome;
    result.probability = measured.probability;
    result.bob_state = std::move(measured.state);

    const PauliString padding = ctx.b.element(result.outcome);
    result.transcript.mode = Mode::kReceiveMeasure;
    result.transcript.rounds.push_back(Round{Direction::kBobToAlice, ctx.m(), {}, result.outcome});
    result.transcript.padding = padding;
    result.fidelity = pure_fidelity(result.bob_state, apply_on_psi(psi, dense_matrix(padding) * u));
    return result;
}

BlindnessReport verify_blindness_rm(const ProtocolContext &ctx, const std::vector<Matrix> &gates, const Matrix &v,
                                    const std::vector<QuantumState> &inputs) {
    constexpr double kTol = 1e-10;
    BlindnessReport report;
    const std::vector<size_t> alice = qubit_range(0, ctx.m());
    const double uniform = 1.0 / static_cast<double>(ctx.b.num_elements());
    for (size_t k = 0; k < inputs.size(); k++) {
        const QuantumState &input = inputs[k];
        const Matrix expected = pauli_channel_average(ctx, input);
        const QuantumState prepared = rm_prepare(ctx, v, input);
        std::vector<std::string> bob_registers;
        for (const Register &reg : input.layout()) {
            bob_registers.push_back(reg.name);
        }
        const Matrix sent_view = partial_trace(prepared, bob_registers).density();
        BlindnessRecord before{"input " + std::to_string(k) + " after sending", trace_distance(sent_view, expected)};
        report.max_distance = std::max(report.max_distance, before.max_distance);
        report.records.push_back(before);

        for (size_t d = 0; d < gates.size(); d++) {
            const MeasurementBasis basis(rm_measurement_basis(ctx, gates[d], v));
            Matrix average = Matrix::Zero(expected.rows(), expected.cols());
            std::vector<double> probs(ctx.b.num_elements(), 0.0);
            for (const MeasurementResult &branch : measurement_branches(prepared, alice, basis)) {
                average += branch.probability * branch.state.density();
                probs[branch.outcome] = branch.probability;
            }
            for (double p : probs) {
                report.max_outcome_deviation = std::max(report.max_outcome_deviation, std::abs(p - uniform));
            }
            BlindnessRecord rec{"input " + std::to_string(k) + " gate " + std::to_string(d),
                                trace_distance(average, expected)};
            report.max_distance = std::max(report.max_distance, rec.max_distance);
            report.records.push_back(rec);
        }
    }
    report.pass = report.max_distance <= kTol && report.max_outcome_deviation <= kTol;
    return report;
}

// Prepare and send, two rounds.

Matrix ps_extended_member(const ProtocolContext &ctx, const Matrix &u_hat, uint64_t a, uint64_t b) {
    if (a >= ctx.b.num_elements() || b >= ctx.b.num_elements()) {
        throw ValidationError("padding index out of range");
    }
    return ctx.b.dense_element(a) * sandwich(ctx, u_hat, b);
}

namespace {

uint64_t pick(const std::optional<uint64_t> &forced, uint64_t bound, Rng &rng, const char *what) {
    if (forced) {
        if (*forced >= bound) {
            throw ValidationError(std::string(what) + " out of range");
        }
        return *forced;
    }
    return rng.below(bound);
}

// Bob's registers right after receiving |phi_U>: "sent" followed by the input layout.
QuantumState receive_phi(const ProtocolContext &ctx, const Vector &phi, const QuantumState &psi,
                         const Matrix *undo = nullptr) {
    QuantumState state = tensor(QuantumState::pure({{"sent", ctx.m()}}, phi), psi);
    if (undo != nullptr) {
        state = apply_unitary(state, qubit_range(0, ctx.m()), *undo);
    }
    state = apply_ladder(ctx, std::move(state), 0);
    return apply_unitary(state, qubit_range(0, ctx.m()), hadamard_layer(ctx.m()));
}

double intermediate_gap(const ProtocolContext &ctx, const Matrix &u, const QuantumState &psi,
                        const QuantumState &actual) {
    const Eigen::Index dim = static_cast<Eigen::Index>(psi.dim());
    const uint64_t count = ctx.b.num_elements();
    const std::vector<size_t> targets = psi.qubits_of("psi");
    Matrix k(dim * static_cast<Eigen::Index>(count), dim);
    for (uint64_t y = 0; y < count; y++) {
        k.middleRows(static_cast<Eigen::Index>(y) * dim, dim) = embed(sandwich(ctx, u, y), targets, psi.num_qubits());
    }
    const double norm = std::pow(2.0, -0.5 * static_cast<double>(ctx.m()));
    if (psi.is_pure()) {
        return max_abs(Matrix(actual.vector() - norm * k * psi.vector()));
    }
    return max_abs(Matrix(actual.density() - norm * norm * k * psi.density() * k.adjoint()));
}

}  // namespace

Ps2Result run_ps_two_round(const ProtocolContext &ctx, const Matrix &u_hat, const QuantumState &psi, Rng &rng,
                           const Ps2Options &options) {
    check_context(ctx);
    check_input(ctx, psi, "sent");
    check_gate(ctx, u_hat, ctx.n(), "target gate");
    const uint64_t count = ctx.b.num_elements();
    const size_t m = ctx.m();

    Ps2Result result;
    result.a = pick(options.a, count, rng, "a");
    result.b = pick(options.b, count, rng, "b");
    result.sent_unitary = ps_extended_member(ctx, u_hat, result.a, result.b);
    const PhiState phi = phi_state(result.sent_unitary, ctx.b, ctx.st);

    const QuantumState received = receive_phi(ctx, phi.amplitudes, psi);
    result.intermediate_deviation = intermediate_gap(ctx, result.sent_unitary, psi, received);

    const std::vector<size_t> sent = qubit_range(0, m);
    const MeasurementBasis computational = MeasurementBasis::computational(m);
    MeasurementResult measured = options.measured_y
                                     ? measure_in_basis(received, sent, computational, *options.measured_y)
                                     : measure_in_basis(received, sent, computational, rng);
    result.y = measured.outcome;
    result.reported_y = pick(options.reported_y ? options.reported_y : std::optional<uint64_t>(result.y), count,
                             rng, "reported y");

    result.x = pick(options.x, count, rng, "x");
    const Matrix target = ctx.b.dense_element(result.x) * u_hat;
    result.lambda = target * sandwich(ctx, result.sent_unitary, result.reported_y).adjoint();
    result.lambda_deviation =
        phase_aligned_distance(result.lambda * sandwich(ctx, result.sent_unitary, result.y), target);
    result.bob_state = apply_on_psi(measured.state, result.lambda);

    result.transcript.mode = Mode::kPrepareSendTwoRound;
    result.transcript.rounds.push_back(Round{Direction::kAliceToBob, m, {}, std::nullopt});
    result.transcript.rounds.push_back(Round{Direction::kBobToAlice, 0, {bits(result.reported_y, m)}, result.y});
    result.transcript.rounds.push_back(Round{Direction::kAliceToBob, 0, {"lambda"}, std::nullopt});
    result.transcript.padding = ctx.b.element(result.x);
    result.fidelity = pure_fidelity(result.bob_state, apply_on_psi(psi, target));
    return result;
}

PsBlindnessReport verify_blindness_ps(const ProtocolContext &ctx, const std::vector<Matrix> &targets,
                                      const std::vector<uint64_t> &forced_y, Rng &rng) {
    constexpr double kTol = 1e-10;
    check_context(ctx);
    PsBlindnessReport report;
    const uint64_t count = ctx.b.num_elements();
    const Eigen::Index dim = static_cast<Eigen::Index>(count);
    const Matrix flat = Matrix::Identity(dim, dim) / static_cast<double>(count);
    std::vector<Matrix> mixtures;
    for (const Matrix &u_hat : targets) {
        check_gate(ctx, u_hat, ctx.n(), "target gate");
        for (uint64_t y : forced_y) {
            if (y >= count) {
                throw ValidationError("forced y out of range");
            }
            const Matrix u0 = ps_extended_member(ctx, u_hat, rng.below(count), rng.below(count));
            const Matrix lambda = ctx.b.dense_element(rng.below(count)) * u_hat * sandwich(ctx, u0, y).adjoint();
            const Matrix qy = dense_matrix(ctx.q.element(y));
            Matrix phis(dim, dim);
            for (uint64_t x = 0; x < count; x++) {
                const Matrix ux = qy.adjoint() * lambda.adjoint() * ctx.b.dense_element(x) * u_hat * qy;
                phis.col(static_cast<Eigen::Index>(x)) = phi_state(ux, ctx.b, ctx.st).amplitudes;
            }
            const Matrix gram = phis.adjoint() * phis;
            const Matrix mixture = phis * phis.adjoint() / static_cast<double>(count);
            report.max_gram_deviation =
                std::max(report.max_gram_deviation, max_abs(Matrix(gram - Matrix::Identity(dim, dim))));
            report.max_mixture_deviation = std::max(report.max_mixture_deviation, max_abs(Matrix(mixture - flat)));
            for (const Matrix &other : mixtures) {
                report.max_cross_gate_distance =
                    std::max(report.max_cross_gate_distance, trace_distance(mixture, other));
            }
            mixtures.push_back(mixture);
            report.cases++;
        }
    }
    report.pass = report.max_gram_deviation <= kTol && report.max_mixture_deviation <= kTol &&
                  report.max_cross_gate_distance <= kTol;
    return report;
}

// Prepare and send, one round.

PauliString single_round_padding(const ProtocolContext &ctx, const CliffordTableau &u_hat, uint64_t x, uint64_t y) {
    if (u_hat.num_qubits() != ctx.n()) {
        throw DimensionError("target tableau has the wrong width");
    }
    const PauliString qy = ctx.q.element(y);
    const PauliString qy_dagger = qy.with_phase(-qy.phase());
    return qy * ctx.b.element(x) * u_hat.conjugate(qy_dagger);
}

Ps1Result run_ps_single_round(const ProtocolContext &ctx, const Matrix &u_hat, const Matrix &v_p,
                              const QuantumState &psi, Rng &rng, std::optional<uint64_t> forced_x,
                              std::optional<uint64_t> forced_y) {
    check_context(ctx);
    check_input(ctx, psi, "sent");
    check_gate(ctx, u_hat, ctx.n(), "target gate");
    check_gate(ctx, v_p, ctx.m(), "V_p");
    const CliffordTableau tableau = CliffordTableau::from_dense(u_hat);
    const uint64_t count = ctx.b.num_elements();
    const size_t m = ctx.m();

    Ps1Result result;
    result.x = pick(forced_x, count, rng, "x");
    const PhiState phi = phi_state(ctx.b.dense_element(result.x) * u_hat, ctx.b, ctx.st);
    const Vector sent = v_p * phi.amplitudes;
    const Matrix undo = v_p.adjoint();
    const QuantumState received = receive_phi(ctx, sent, psi, &undo);

    const std::vector<size_t> sent_qubits = qubit_range(0, m);
    const MeasurementBasis computational = MeasurementBasis::computational(m);
    MeasurementResult measured = forced_y ? measure_in_basis(received, sent_qubits, computational, *forced_y)
                                          : measure_in_basis(received, sent_qubits, computational, rng);
    result.y = measured.outcome;
    result.bob_state = std::move(measured.state);
    result.predicted_padding = single_round_padding(ctx, tableau, result.x, result.y);

    result.transcript.mode = Mode::kPrepareSendSingleRound;
    result.transcript.rounds.push_back(Round{Direction::kAliceToBob, m, {}, std::nullopt});
    result.transcript.rounds.push_back(Round{Direction::kBobToAlice, 0, {bits(result.y, m)}, result.y});
    result.transcript.padding = result.predicted_padding;
    result.fidelity =
        pure_fidelity(result.bob_state, apply_on_psi(psi, dense_matrix(result.predicted_padding) * u_hat));
    return result;
}

}  // namespace blindgate

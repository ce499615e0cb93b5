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


#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <string>

#include "blindgate/errors.h"
#include "blindgate/gf2.h"
#include "blindgate/protocols.h"

namespace blindgate {

namespace {

constexpr double kSlackTol = 1e-8;

std::vector<size_t> first_qubits(size_t count) {
    std::vector<size_t> out(count);
    std::iota(out.begin(), out.end(), size_t{0});
    return out;
}

std::vector<std::string> register_names(const QuantumState &state) {
    std::vector<std::string> names;
    for (const Register &reg : state.layout()) {
        names.push_back(reg.name);
    }
    return names;
}

Matrix hadamards(size_t m) {
    Matrix out = gates::identity(0);
    for (size_t i = 0; i < m; i++) {
        out = kron(out, gates::h());
    }
    return out;
}

// Text key for a unitary up to global phase.
std::string unitary_key(const Matrix &u) {
    const double top = u.cwiseAbs().maxCoeff();
    Complex phase{1.0, 0.0};
    for (Eigen::Index i = 0; i < u.size(); i++) {
        if (std::abs(u.data()[i]) >= 0.5 * top) {
            phase = std::abs(u.data()[i]) / u.data()[i];
            break;
        }
    }
    std::string key;
    char buf[64];
    for (Eigen::Index i = 0; i < u.size(); i++) {
        const Complex v = phase * u.data()[i];
        std::snprintf(buf, sizeof(buf), "%.7f,%.7f;", v.real() + 0.0, v.imag() + 0.0);
        key += buf;
    }
    return key;
}

struct Bucket {
    double weight = 0.0;
    Matrix rho;

    void add(double w, const Matrix &state) {
        if (weight == 0.0 && rho.size() == 0) {
            rho = w * state;
        } else {
            rho += w * state;
        }
        weight += w;
    }
};

template <typename Map>
double conditional_entropy(const Map &buckets) {
    double s = 0.0;
    for (const auto &[key, bucket] : buckets) {
        if (bucket.weight > 1e-14) {
            s += bucket.weight * von_neumann_entropy(Matrix(bucket.rho / bucket.weight));
        }
    }
    return s;
}

}  // namespace

EntropyLedger entropy_ledger(const std::vector<LedgerStage> &stages) {
    if (stages.empty()) {
        throw ValidationError("entropy ledger needs at least one stage");
    }
    EntropyLedger ledger;
    size_t total = 0;
    for (size_t k = 1; k < stages.size(); k++) {
        LedgerRow row;
        row.label = stages[k].label;
        row.s_before = stages[k - 1].entropy;
        row.qubits = stages[k].qubits;
        row.s_after = stages[k].entropy;
        row.slack = row.s_before + static_cast<double>(row.qubits) - row.s_after;
        row.pass = row.slack >= -kSlackTol;
        ledger.pass = ledger.pass && row.pass;
        total += row.qubits;
        ledger.rows.push_back(row);
    }
    ledger.cumulative_slack = stages.front().entropy + static_cast<double>(total) - stages.back().entropy;
    ledger.pass = ledger.pass && ledger.cumulative_slack >= -kSlackTol;
    return ledger;
}

std::vector<LedgerStage> rm_ledger_stages(const ProtocolContext &ctx, const Matrix &u, const Matrix &v,
                                          const QuantumState &input) {
    std::vector<LedgerStage> stages;
    stages.push_back({"input", von_neumann_entropy(input), 0});

    const QuantumState prepared = rm_prepare(ctx, v, input);
    const std::vector<std::string> bob = register_names(input);
    stages.push_back({"bob sends register", von_neumann_entropy(partial_trace(prepared, bob)), ctx.m()});

    const MeasurementBasis basis(rm_measurement_basis(ctx, u, v));
    Matrix average = Matrix::Zero(static_cast<Eigen::Index>(input.dim()), static_cast<Eigen::Index>(input.dim()));
    for (const MeasurementResult &branch : measurement_branches(prepared, first_qubits(ctx.m()), basis)) {
        average += branch.probability * branch.state.density();
    }
    stages.push_back({"alice measures", von_neumann_entropy(average), 0});
    return stages;
}

std::vector<LedgerStage> ps2_ledger_stages(const ProtocolContext &ctx, const Matrix &u_hat, const QuantumState &input) {
    const size_t m = ctx.m();
    if (m == 0 || m > 3) {
        throw ResourceError("two-round ledger supports 1 to 3 communicated qubits");
    }
    const uint64_t count = ctx.b.num_elements();
    const double w_key = 1.0 / static_cast<double>(count * count);
    const double w_x = 1.0 / static_cast<double>(count);
    const std::vector<size_t> sent = first_qubits(m);
    const MeasurementBasis computational = MeasurementBasis::computational(m);
    const Matrix h_layer = hadamards(m);
    const Matrix rho_in = input.density();

    std::vector<LedgerStage> stages;
    stages.push_back({"input", von_neumann_entropy(rho_in), 0});

    Matrix phi_mix = Matrix::Zero(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(count));
    std::map<uint64_t, Bucket> by_y;
    std::map<std::string, Bucket> by_lambda;
    for (uint64_t a = 0; a < count; a++) {
        for (uint64_t b = 0; b < count; b++) {
            const Matrix u = ps_extended_member(ctx, u_hat, a, b);
            const Vector phi = phi_state(u, ctx.b, ctx.st).amplitudes;
            phi_mix += w_key * phi * phi.adjoint();

            QuantumState state = tensor(QuantumState::pure({{"sent", m}}, phi), input);
            const std::vector<size_t> psi = state.qubits_of("psi");
            for (size_t i = m; i-- > 0;) {
                state = apply_controlled_pauli(state, i, ctx.b.paulis()[i], psi);
            }
            state = apply_unitary(state, sent, h_layer);
            for (const MeasurementResult &branch : measurement_branches(state, sent, computational)) {
                const Matrix rho_y = branch.state.density();
                by_y[branch.outcome].add(w_key * branch.probability, rho_y);
                const Matrix qy = dense_matrix(ctx.q.element(branch.outcome));
                const Matrix sent_back = qy * u * qy.adjoint();
                const std::vector<size_t> targets = branch.state.qubits_of("psi");
                for (uint64_t x = 0; x < count; x++) {
                    const Matrix lambda = ctx.b.dense_element(x) * u_hat * sent_back.adjoint();
                    const Matrix big = embed(lambda, targets, branch.state.num_qubits());
                    by_lambda[std::to_string(branch.outcome) + "|" + unitary_key(lambda)].add(
                        w_key * branch.probability * w_x, big * rho_y * big.adjoint());
                }
            }
        }
    }
    stages.push_back({"alice sends state", von_neumann_entropy(phi_mix) + stages.front().entropy, m});
    stages.push_back({"bob measures", conditional_entropy(by_y), 0});
    stages.push_back({"alice sends correction", conditional_entropy(by_lambda), 0});
    return stages;
}

Matrix special_rho(const PauliSubspace &pf) {
    const size_t n = pf.num_qubits();
    if (n > 4) {
        throw ResourceError("special state limited to 4 qubits per side");
    }
    const size_t r = pf.dim();
    const Gf2Matrix full = extend_to_full_basis(pf.generators());
    const Eigen::Index dim = Eigen::Index{1} << (2 * n);
    Matrix rho = Matrix::Identity(dim, dim);
    for (size_t i = r; i < 2 * n; i++) {
        const Matrix p = dense_matrix(PauliString::from_row(n, full.row(i)));
        rho = rho * (Matrix::Identity(dim, dim) + kron(p, p));
    }
    return rho / static_cast<double>(dim);
}

ResourceBoundReport resource_bound_experiment(const FamilyAnalysis &analysis, const Matrix &v) {
    constexpr double kTol = 1e-10;
    const ProtocolContext ctx = ProtocolContext::from(analysis);
    ResourceBoundReport report;
    report.n = ctx.n();
    report.r = analysis.pf.dim();
    report.bound = 2 * report.n - report.r;
    report.cost = ctx.m();

    const Matrix rho = special_rho(analysis.pf);
    report.rho_entropy = von_neumann_entropy(rho);
    const QuantumState input = QuantumState::mixed({{"psi", report.n}, {"ref", report.n}}, rho);
    const Matrix identity = gates::identity(report.n);
    const QuantumState prepared = rm_prepare(ctx, v, input);
    const MeasurementBasis basis(rm_measurement_basis(ctx, identity, v));

    const Eigen::Index dim = rho.rows();
    const Matrix flat = Matrix::Identity(dim, dim) / static_cast<double>(dim);
    const std::vector<size_t> psi = input.qubits_of("psi");
    Matrix average = Matrix::Zero(dim, dim);
    report.outcome_probabilities.assign(ctx.b.num_elements(), 0.0);
    for (const MeasurementResult &branch : measurement_branches(prepared, first_qubits(ctx.m()), basis)) {
        const Matrix branch_rho = branch.state.density();
        const Matrix expected = apply_unitary(input, psi, ctx.b.dense_element(branch.outcome)).density();
        report.max_branch_deviation = std::max(report.max_branch_deviation, max_abs(Matrix(branch_rho - expected)));
        report.outcome_probabilities[branch.outcome] = branch.probability;
        average += branch.probability * branch_rho;
    }
    report.max_average_deviation = max_abs(Matrix(average - flat));
    report.final_entropy = von_neumann_entropy(average);

    const double uniform = 1.0 / static_cast<double>(ctx.b.num_elements());
    bool uniform_ok = true;
    for (double p : report.outcome_probabilities) {
        uniform_ok = uniform_ok && std::abs(p - uniform) <= kTol;
    }
    report.pass = std::abs(report.rho_entropy - static_cast<double>(report.r)) <= 1e-8 &&
                  report.max_average_deviation <= kTol && report.max_branch_deviation <= kTol &&
                  std::abs(report.final_entropy - static_cast<double>(2 * report.n)) <= 1e-8 &&
                  report.bound == report.cost && uniform_ok;
    return report;
}

}  // namespace blindgate

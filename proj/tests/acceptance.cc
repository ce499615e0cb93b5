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


// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed below.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "blindgate/commands.h"
#include "blindgate/family_config.h"
#include "blindgate/padding.h"
#include "blindgate/protocols.h"
#include "blindgate/rng.h"
#include "blindgate/separable.h"
#include "blindgate/tableau.h"

using namespace blindgate;

namespace {

constexpr double kFidelity = 1e-9;
constexpr double kExact = 1e-10;
constexpr double kGram = 1e-9;
constexpr double kEntropy = 1e-8;
constexpr double kPhaseExact = 1e-12;

const std::string kFixtures = BLINDGATE_FIXTURE_DIR;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::string failures;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            failures += " [failed: " + what + "]";
        }
    }
};

FamilyConfig fixture(const std::string &name) {
    return load_family(kFixtures + "/families/" + name + ".json");
}

struct Setup {
    GateFamily family;
    FamilyAnalysis analysis;
    ProtocolContext ctx;
};

Setup setup(const std::string &name) {
    GateFamily f = to_gate_family(fixture(name));
    FamilyAnalysis a = analyze_family(f);
    ProtocolContext ctx = ProtocolContext::from(a);
    return Setup{std::move(f), std::move(a), std::move(ctx)};
}

std::vector<std::string> strs(const std::vector<PauliString> &ps) {
    std::vector<std::string> out;
    for (const auto &p : ps) {
        out.push_back(p.str());
    }
    return out;
}

double max_pauli_overlap(const Matrix &m) {
    const size_t n = static_cast<size_t>(std::log2(static_cast<double>(m.rows())) + 0.5);
    double best = 0.0;
    for (uint64_t row = 0; row < (uint64_t{1} << (2 * n)); row++) {
        const Matrix p = dense_matrix(PauliString::from_row(n, row));
        best = std::max(best, std::abs((p.adjoint() * m).trace()) / static_cast<double>(m.rows()));
    }
    return best;
}

// Is every column a tensor product of Z or X eigenstates (up to phase)?
bool product_zx_columns(const Matrix &basis, size_t m) {
    const double s = std::sqrt(0.5);
    std::vector<Vector> singles;
    for (auto [a, b] : {std::pair{1.0, 0.0}, {0.0, 1.0}, {s, s}, {s, -s}}) {
        Vector v(2);
        v << a, b;
        singles.push_back(v);
    }
    for (Eigen::Index c = 0; c < basis.cols(); c++) {
        bool found = false;
        for (uint64_t pick = 0; pick < (uint64_t{1} << (2 * m)) && !found; pick++) {
            Vector prod = Vector::Ones(1);
            for (size_t q = 0; q < m; q++) {
                const Vector &f = singles[(pick >> (2 * (m - 1 - q))) & 3];
                Vector next(prod.size() * 2);
                for (Eigen::Index i = 0; i < prod.size(); i++) {
                    next.segment(2 * i, 2) = prod(i) * f;
                }
                prod = next;
            }
            found = std::abs(std::abs(prod.dot(basis.col(c))) - 1.0) < kExact;
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

Matrix dephase_z(const Matrix &rho) {
    const Matrix z = gates::z();
    return 0.5 * (rho + z * rho * z);
}

Outcome criterion1() {
    Outcome o;
    const auto doc = nlohmann::json::parse(cmd_analyze(fixture("cnot")).json);
    o.require(doc["r"] == 2, "r == 2");
    o.require(doc["support_basis"] == nlohmann::json::array({"+ZI", "+IX"}), "B == <Z_1, X_2>");
    o.require(doc["cost_qubits"] == 2, "cost == 2");

    const Setup s = setup("cnot");
    const Matrix v = separable_measurement_v(s.ctx, gates::cx());
    o.require(product_zx_columns(rm_measurement_basis(s.ctx, gates::identity(2), v), 2) &&
                  product_zx_columns(rm_measurement_basis(s.ctx, gates::cx(), v), 2),
              "Alice measures in product Z/X bases");
    double worst = 1.0;
    for (uint64_t seed = 0; seed < 20; seed++) {
        Rng rng(1000 + seed);
        const QuantumState psi = random_state({{"psi", 2}}, rng);
        for (size_t d = 0; d < 2; d++) {
            const RmResult r = run_rm(s.ctx, s.analysis.adjusted.gate(d), v, psi, rng);
            worst = std::min(worst, r.fidelity.value_or(0.0));
        }
    }
    o.require(worst >= 1.0 - kFidelity, "fidelity on 20 runs");
    o.detail << "r=" << doc["r"] << " B=" << doc["support_basis"].dump() << " cost=" << doc["cost_qubits"]
             << " min fidelity=" << worst;
    return o;
}

Outcome criterion2() {
    Outcome o;
    const Setup s = setup("h");
    o.require(strs(s.analysis.pf.generator_paulis()) == std::vector<std::string>{"+Y"}, "P_F == <Y>");
    const Matrix xh = gates::h() * gates::x();
    const double adj = max_abs(s.analysis.adjusted.gate(1) - xh);
    o.require(adj <= kExact, "adjusted gate == XH");
    o.require(s.analysis.cost() == 1, "cost == 1");
    const std::vector<Complex> c = decompose_in_b(xh, s.analysis.b);
    const double err = std::max(std::abs(c[0] - Complex(std::sqrt(0.5), 0)), std::abs(c[1] - Complex(0, std::sqrt(0.5))));
    o.require(err <= kExact, "decomposition == (1/sqrt2, i/sqrt2)");
    o.detail << "P_F=<Y> adjusted-gate error=" << adj << " cost=" << s.analysis.cost() << " coefficient error=" << err;
    return o;
}

Outcome criterion3() {
    Outcome o;
    const Setup s = setup("rz");
    Rng rng(31);
    const QuantumState psi = random_state({{"psi", 1}}, rng);
    const Matrix rho = psi.density();
    const Matrix expected = dephase_z(rho);
    const Matrix v = gates::identity(1);
    double worst_fid = 1.0, worst_sent = 0.0, worst_avg = 0.0, pairwise = 0.0;
    std::vector<Matrix> averages;
    for (int k = 0; k < 16; k++) {
        const double theta = 2.0 * std::numbers::pi * k / 16.0 + 0.1;
        const Matrix u = s.analysis.adjusted.instantiate(theta);
        const std::vector<std::string> keep{"psi"};
        worst_sent = std::max(worst_sent,
                              trace_distance(partial_trace(rm_prepare(s.ctx, v, psi), keep).density(), expected));
        Matrix avg = Matrix::Zero(2, 2);
        for (uint64_t z = 0; z < 2; z++) {
            const RmResult r = run_rm(s.ctx, u, v, psi, rng, z);
            worst_fid = std::min(worst_fid, r.fidelity.value_or(0.0));
            avg += r.probability * r.bob_state.density();
        }
        worst_avg = std::max(worst_avg, trace_distance(avg, expected));
        averages.push_back(avg);
    }
    for (size_t i = 0; i < averages.size(); i++) {
        for (size_t j = i + 1; j < averages.size(); j++) {
            pairwise = std::max(pairwise, trace_distance(averages[i], averages[j]));
        }
    }
    o.require(worst_fid >= 1.0 - kFidelity, "output Z^i Rz psi");
    o.require(worst_sent <= kExact && worst_avg <= kExact, "Bob's state is the Z-dephased input");
    o.require(pairwise <= kExact, "theta independence");
    o.detail << "16 angles: min fidelity=" << worst_fid << " sent-state distance=" << worst_sent
             << " averaged distance=" << worst_avg << " pairwise=" << pairwise;
    return o;
}

Outcome criterion4() {
    Outcome o;
    const Setup s = setup("hs");
    const PaddingSolutionSpace space = solve_valid_paddings(s.analysis.pf);
    double err = 0.0;
    for (Eigen::Index i = 0; i < space.particular.size(); i++) {
        err = std::max(err, std::abs(space.particular(i) - 0.25));
    }
    o.require(s.analysis.cost() == 2, "cost == 2");
    o.require(space.dimension() == 0, "zero-dimensional solution space");
    o.require(err <= kExact, "solution == uniform 1/4");
    o.detail << "cost=" << s.analysis.cost() << " dimension=" << space.dimension() << " distance to 1/4=" << err;
    return o;
}

Outcome criterion5() {
    Outcome o;
    const Setup s = setup("cz");
    const StabilizerGroup g = stabilizers_of_phi(gates::identity(2), s.analysis.b, s.ctx.st);
    const StabilizerGroup h = stabilizers_of_phi(gates::cz(), s.analysis.b, s.ctx.st);
    o.require(g.str() == "<+ZI, +IZ>", "identity stabilizers <Z_1, Z_2>");
    o.require(h.str() == "<+XZ, +ZX>", "cZ stabilizers <X_1 Z_2, Z_1 X_2>");
    o.require(separable_v(g, h) == CliffordTableau::from_dense(gates::cz()), "separable V == cZ");

    const Matrix s1 = embed(gates::s(), std::vector<size_t>{0}, 2);
    const Matrix s2 = embed(gates::s(), std::vector<size_t>{1}, 2);
    const Matrix cz = gates::cz();
    const std::map<std::string, std::pair<std::string, Matrix>> table{
        {"ZZ", {"I", gates::identity(2)}}, {"ZY", {"S_2", s2}},       {"YZ", {"S_1", s1}},
        {"XY", {"cZ S_2", cz * s2}},       {"YX", {"cZ S_1", cz * s1}}, {"XX", {"cZ", cz}},
    };
    const auto found = enumerate_free_gates(s.ctx, separable_measurement_v(s.ctx, gates::cz()));
    o.require(found.size() == table.size(), "exactly 6 rows");
    size_t matched = 0;
    for (const FreeGate &f : found) {
        const auto it = table.find(f.bases);
        if (it == table.end()) {
            o.require(false, "unexpected row " + f.bases);
            continue;
        }
        const bool same = max_pauli_overlap(f.unitary * it->second.second.adjoint()) >= 1.0 - kExact;
        matched += same ? 1 : 0;
        o.require(same, "row " + f.bases + " expected " + it->second.first + ", found " + f.name);
    }
    o.detail << "stabilizers " << g.str() << " vs " << h.str() << "; rows=" << found.size() << " matched=" << matched;
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (const char *name : {"cnot", "h", "rz", "hs"}) {
        const Setup s = setup(name);
        const ResourceBoundReport r = resource_bound_experiment(s.analysis, gates::identity(s.ctx.m()));
        const std::string tag = std::string(name) + ": ";
        o.require(std::abs(r.rho_entropy - static_cast<double>(r.r)) <= kEntropy, tag + "S(rho) == r");
        o.require(r.max_branch_deviation <= kExact && r.max_average_deviation <= kExact, tag + "maximally mixed");
        o.require(r.cost == 2 * r.n - r.r, tag + "cost == 2n - r");
        o.detail << tag << "S=" << r.rho_entropy << " r=" << r.r << " cost=" << r.cost
                 << " dev=" << std::max(r.max_branch_deviation, r.max_average_deviation) << "; ";
    }
    return o;
}

Outcome criterion7() {
    Outcome o;
    Rng rng(7007);
    double worst = 0.0;
    std::map<size_t, size_t> by_r;
    for (int i = 0; i < 50; i++) {
        const size_t n = 1 + static_cast<size_t>(i % 2);
        const size_t dim = size_t{1} << n;
        Matrix u;
        switch (i % 3) {
        case 0:
            u = CliffordTableau::random(n, rng).to_dense();
            break;
        case 1: {
            const Matrix c = CliffordTableau::random(n, rng).to_dense();
            Matrix d = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
            for (size_t k = 0; k < dim; k++) {
                d(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = std::polar(1.0, 2 * std::numbers::pi * rng.uniform());
            }
            u = c * d * c.adjoint();
            break;
        }
        default:
            u = haar_unitary(dim, rng);
        }
        const FamilyAnalysis a = analyze_family(GateFamily(n, {gates::identity(n), u}));
        by_r[a.pf.dim()]++;
        if (a.b.size() == 0) {
            continue;
        }
        const StandardTransform st = standard_transformation(a.b);
        const uint64_t count = a.b.num_elements();
        for (const Matrix &g : a.adjusted.gates()) {
            Matrix cols(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(count));
            for (uint64_t x = 0; x < count; x++) {
                cols.col(static_cast<Eigen::Index>(x)) = phi_state(a.b.dense_element(x) * g, a.b, st).amplitudes;
            }
            worst = std::max(worst, max_abs(cols.adjoint() * cols - Matrix::Identity(cols.cols(), cols.cols())));
        }
    }
    o.require(worst <= kGram, "Gram == identity");
    o.detail << "50 instances, max |G - I|=" << worst << " r histogram:";
    for (auto [r, c] : by_r) {
        o.detail << " r" << r << "=" << c;
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    const Setup cnot = setup("cnot");
    const Setup cz = setup("cz");
    const Setup h = setup("h");
    struct Target {
        const Setup *s;
        size_t d;
    };
    const std::vector<Target> targets{{&cnot, 0}, {&cnot, 1}, {&cz, 1}, {&h, 1}};
    double worst = 1.0;
    for (int i = 0; i < 100; i++) {
        Rng rng(8000 + static_cast<uint64_t>(i));
        const Target &t = targets[static_cast<size_t>(i) % targets.size()];
        const QuantumState psi = random_state({{"psi", t.s->ctx.n()}}, rng);
        const Ps2Result r = run_ps_two_round(t.s->ctx, t.s->analysis.adjusted.gate(t.d), psi, rng);
        worst = std::min(worst, r.fidelity.value_or(0.0));
    }
    o.require(worst >= 1.0 - kFidelity, "two-round output B_x U psi");

    Rng rng(8100);
    double mixture = 0.0;
    size_t cases = 0;
    for (const Setup *s : {&cnot, &cz}) {
        const PsBlindnessReport rep = verify_blindness_ps(s->ctx, s->analysis.adjusted.gates(), {0, 1, 2, 3}, rng);
        mixture = std::max({mixture, rep.max_mixture_deviation, rep.max_gram_deviation});
        cases += 4;
    }
    o.require(mixture <= kExact, "x-averaged sent state is maximally mixed");

    double ps1 = 1.0;
    size_t branches = 0;
    for (const Setup *s : {&cnot, &cz}) {
        const Matrix u = s->analysis.adjusted.gate(1);
        const StabilizerGroup g = stabilizers_of_phi(gates::identity(2), s->analysis.b, s->ctx.st);
        const StabilizerGroup hh = stabilizers_of_phi(u, s->analysis.b, s->ctx.st);
        const Matrix v_p = separable_v(g, hh).to_dense().adjoint();
        Rng prng(8200);
        const QuantumState psi = random_state({{"psi", 2}}, prng);
        for (uint64_t x = 0; x < 4; x++) {
            for (uint64_t y = 0; y < 4; y++) {
                const Ps1Result r = run_ps_single_round(s->ctx, u, v_p, psi, prng, x, y);
                ps1 = std::min(ps1, r.fidelity.value_or(0.0));
                branches++;
            }
        }
    }
    o.require(ps1 >= 1.0 - kFidelity, "single-round output matches predicted padding");
    o.detail << "100 runs min fidelity=" << worst << "; " << cases << " forced y, max deviation=" << mixture << "; "
             << branches << " single-round branches min fidelity=" << ps1;
    return o;
}

Outcome criterion9() {
    Outcome o;
    Rng rng(9009);
    size_t pauli_cases = 0, tableau_cases = 0;
    double worst = 0.0;
    bool commutation_ok = true;
    for (int i = 0; i < 1200; i++) {
        const size_t n = 1 + static_cast<size_t>(rng.below(3));
        const uint64_t mask = (uint64_t{1} << n) - 1;
        const PauliString a(n, rng.next() & mask, rng.next() & mask, static_cast<int>(rng.below(4)));
        const PauliString b(n, rng.next() & mask, rng.next() & mask, static_cast<int>(rng.below(4)));
        const Matrix da = dense_matrix(a), db = dense_matrix(b);
        worst = std::max(worst, max_abs(dense_matrix(a * b) - da * db));
        const bool anti = max_abs(da * db + db * da) < kPhaseExact;
        commutation_ok = commutation_ok && (commutator(a, b) == anti);
        pauli_cases++;
    }
    for (int i = 0; i < 1200; i++) {
        const size_t n = 1 + static_cast<size_t>(rng.below(3));
        const uint64_t mask = (uint64_t{1} << n) - 1;
        const CliffordTableau c = CliffordTableau::random(n, rng);
        const CliffordTableau c2 = CliffordTableau::random(n, rng);
        const Matrix u = c.to_dense();
        const PauliString p(n, rng.next() & mask, rng.next() & mask, static_cast<int>(rng.below(4)));
        worst = std::max(worst, max_abs(dense_matrix(c.conjugate(p)) - u * dense_matrix(p) * u.adjoint()));
        const Matrix composed = c.then(c2).to_dense();
        worst = std::max(worst, phase_aligned_distance(composed, c2.to_dense() * u));
        worst = std::max(worst, phase_aligned_distance(c.inverse().to_dense(), u.adjoint()));
        tableau_cases++;
    }
    o.require(worst <= kPhaseExact, "dense agreement");
    o.require(commutation_ok, "commutation agrees with dense");
    o.detail << pauli_cases << " Pauli and " << tableau_cases << " tableau cases, max deviation=" << worst;
    return o;
}

Outcome criterion10() {
    Outcome o;
    double slack = std::numeric_limits<double>::infinity();
    size_t rows = 0;
    Rng rng(10010);
    for (const char *name : {"cnot", "cz", "h", "hs", "rz"}) {
        const Setup s = setup(name);
        const size_t n = s.ctx.n();
        const std::vector<QuantumState> inputs{entangled_reference_state(n), random_state({{"psi", n}}, rng)};
        for (const Matrix &u : s.analysis.adjusted.gates()) {
            for (const QuantumState &in : inputs) {
                for (const auto &stages : {rm_ledger_stages(s.ctx, u, gates::identity(s.ctx.m()), in),
                                           ps2_ledger_stages(s.ctx, u, in)}) {
                    for (const LedgerRow &r : entropy_ledger(stages).rows) {
                        slack = std::min(slack, r.slack);
                        rows++;
                    }
                }
            }
        }
    }
    o.require(slack >= -kEntropy, "ledger slack");

    double al = std::numeric_limits<double>::infinity(), cc = al;
    for (int i = 0; i < 100; i++) {
        const QuantumState st = random_state({{"a", 1}, {"b", 2}, {"c", 2}}, rng);
        const double sab = von_neumann_entropy(partial_trace(st, std::vector<std::string>{"a", "b"}));
        const double sa = von_neumann_entropy(partial_trace(st, std::vector<std::string>{"a"}));
        const double sb = von_neumann_entropy(partial_trace(st, std::vector<std::string>{"b"}));
        al = std::min({al, sa + sb - sab, sab - std::abs(sa - sb)});
    }
    for (int i = 0; i < 100; i++) {
        const QuantumState st = random_state({{"a", 2}, {"b", 1}, {"c", 1}}, rng);
        const std::vector<std::string> keep{"b"};
        double conditional = 0.0;
        for (const auto &br : measurement_branches(st, st.qubits_of("a"), MeasurementBasis::computational(2))) {
            if (br.probability > 1e-14) {
                conditional += br.probability * von_neumann_entropy(partial_trace(br.state, keep));
            }
        }
        cc = std::min(cc, von_neumann_entropy(partial_trace(st, keep)) - conditional);
    }
    o.require(al >= -kEntropy, "Araki-Lieb");
    o.require(cc >= -kEntropy, "measurement concavity");
    o.detail << rows << " ledger rows, min slack=" << slack << "; Araki-Lieb min margin=" << al
             << "; concavity min margin=" << cc;
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"C1  CNOT analysis and receive-and-measure runs", criterion1},
        {"C2  Hadamard adjustment and decomposition", criterion2},
        {"C3  Rz family hiding across 16 angles", criterion3},
        {"C4  HS unique uniform padding", criterion4},
        {"C5  cZ separable measurement and free-gate table", criterion5},
        {"C6  resource bound witness on four families", criterion6},
        {"C7  orthonormality of phi states on 50 instances", criterion7},
        {"C8  prepare-and-send suite", criterion8},
        {"C9  Pauli and tableau algebra against dense matrices", criterion9},
        {"C10 entropy ledger and entropy inequalities", criterion10},
    };
    int failed = 0;
    for (const auto &[name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        failed += o.pass ? 0 : 1;
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name,
                    (o.detail.str() + o.failures).c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

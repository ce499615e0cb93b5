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


#include "blindgate/commands.h"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "blindgate/errors.h"
#include "blindgate/padding.h"
#include "blindgate/rng.h"
#include "blindgate/separable.h"

namespace blindgate {

using Json = nlohmann::ordered_json;

namespace {

constexpr double kStateTol = 1e-10;
constexpr double kFidelityTol = 1e-9;
constexpr double kGramTol = 1e-9;
constexpr double kEntropyTol = 1e-8;

Json complex_json(Complex c) {
    return Json::array({c.real(), c.imag()});
}

Json paulis_json(const std::vector<PauliString> &ps) {
    Json out = Json::array();
    for (const PauliString &p : ps) {
        out.push_back(p.str());
    }
    return out;
}

std::string bitstring(uint64_t value, size_t width) {
    std::string s(width, '0');
    for (size_t i = 0; i < width; i++) {
        if ((value >> (width - 1 - i)) & 1) {
            s[i] = '1';
        }
    }
    return s;
}

class ReportBuilder {
  public:
    ReportBuilder(std::string command, const GateFamily &family) {
        doc_["tool"] = "blindgate";
        doc_["engine_version"] = kEngineVersion;
        doc_["command"] = std::move(command);
        doc_["family"] = {{"n", family.num_qubits()}, {"labels", family.labels()}};
    }

    Json &doc() { return doc_; }

    void check(std::string name, double value, double tolerance, bool pass, std::string anchor) {
        checks_.push_back(CheckRecord{std::move(name), pass, value, tolerance, std::move(anchor)});
    }

    /// value <= tolerance
    void bound(std::string name, double value, double tolerance, std::string anchor) {
        check(std::move(name), value, tolerance, value <= tolerance, std::move(anchor));
    }

    /// value >= -tolerance
    void floor(std::string name, double value, double tolerance, std::string anchor) {
        check(std::move(name), value, tolerance, value >= -tolerance, std::move(anchor));
    }

    CommandOutput finish() {
        Json records = Json::array();
        bool pass = true;
        for (const CheckRecord &c : checks_) {
            records.push_back({{"name", c.name},
                               {"pass", c.pass},
                               {"value", c.value},
                               {"tolerance", c.tolerance},
                               {"anchor", c.anchor}});
            pass = pass && c.pass;
        }
        doc_["checks"] = records;
        doc_["pass"] = pass;
        return CommandOutput{doc_.dump(2) + "\n", pass, checks_};
    }

  private:
    Json doc_;
    std::vector<CheckRecord> checks_;
};

struct Prepared {
    GateFamily family;
    FamilyAnalysis analysis;
    ProtocolContext ctx;
};

Prepared prepare(const FamilyConfig &config) {
    GateFamily family = to_gate_family(config);
    FamilyAnalysis analysis = analyze_family(family);
    if (analysis.b.size() == 0) {
        throw ValidationError("family has an empty support basis; there is nothing to hide");
    }
    ProtocolContext ctx = ProtocolContext::from(analysis);
    return Prepared{std::move(family), std::move(analysis), std::move(ctx)};
}

QuantumState psi_source(const std::string &spec, size_t n, Rng &rng) {
    if (spec == "zero") {
        return QuantumState::zero({{"psi", n}});
    }
    if (spec == "random") {
        return random_state({{"psi", n}}, rng);
    }
    if (spec == "entref") {
        return entangled_reference_state(n);
    }
    if (spec.starts_with("file:")) {
        QuantumState s = load_state_fixture(spec.substr(5));
        if (s.qubits_of("psi").size() != n) {
            throw ConfigError(ConfigErrorCode::kSchema, "/layout", "state needs a \"psi\" register of width n");
        }
        return s;
    }
    throw ValidationError("unknown psi source \"" + spec + "\"");
}

Matrix choose_gate(const Prepared &p, size_t choice, std::optional<double> theta) {
    if (theta) {
        return p.analysis.adjusted.instantiate(*theta);
    }
    if (choice >= p.analysis.adjusted.size()) {
        throw ValidationError("choice " + std::to_string(choice) + " is outside the family");
    }
    return p.analysis.adjusted.gate(choice);
}

Json rounds_json(const ProtocolTranscript &t) {
    Json out = Json::array();
    for (const Round &r : t.rounds) {
        Json j{{"direction", r.direction == Direction::kAliceToBob ? "alice->bob" : "bob->alice"},
               {"qubits", r.qubits},
               {"classical", r.classical}};
        if (r.outcome) {
            j["outcome"] = *r.outcome;
        }
        out.push_back(std::move(j));
    }
    return out;
}

std::optional<uint64_t> forced_at(const std::vector<uint64_t> &forced, size_t i) {
    return i < forced.size() ? std::optional<uint64_t>(forced[i]) : std::nullopt;
}

StabilizerGroup phi_group(const ProtocolContext &ctx, const Matrix &u) {
    return stabilizers_of_phi(u, ctx.b, ctx.st);
}

// ---- verification suites ----

void suite_blindness(const Prepared &p, Rng rng, ReportBuilder &rep) {
    const size_t n = p.ctx.n();
    const size_t m = p.ctx.m();
    const std::vector<QuantumState> inputs{QuantumState::zero({{"psi", n}}), random_state({{"psi", n}}, rng),
                                           entangled_reference_state(n)};
    const std::vector<Matrix> &gates = p.analysis.adjusted.gates();
    const BlindnessReport honest = verify_blindness_rm(p.ctx, gates, gates::identity(m), inputs);
    rep.bound("blindness.rm.identity_v", honest.max_distance, kStateTol,
              "server state after receive-and-measure equals the B-twirled input for every gate");
    const Matrix v = haar_unitary(size_t{1} << m, rng);
    const BlindnessReport random_v = verify_blindness_rm(p.ctx, gates, v, inputs);
    rep.bound("blindness.rm.random_v", random_v.max_distance, kStateTol,
              "receive-and-measure hides the gate whatever unitary the server applies");

    std::vector<uint64_t> ys;
    for (uint64_t y = 0; y < p.ctx.b.num_elements(); y++) {
        ys.push_back(y);
    }
    const PsBlindnessReport ps = verify_blindness_ps(p.ctx, gates, ys, rng);
    rep.bound("blindness.ps.gram", ps.max_gram_deviation, kStateTol, "sent states are orthonormal in x");
    rep.bound("blindness.ps.mixture", ps.max_mixture_deviation, kStateTol,
              "x-averaged sent state is maximally mixed for every reported y");
    rep.bound("blindness.ps.cross_gate", ps.max_cross_gate_distance, kStateTol,
              "x-averaged sent state does not depend on the gate");
    rep.doc()["blindness"] = {{"rm_records", honest.records.size()}, {"ps_cases", ps.cases}};
}

void suite_padding(const Prepared &p, Rng rng, ReportBuilder &rep) {
    const PaddingSet bp = b_uniform_padding(p.analysis.b);
    const HidingRuleReport rule = check_hiding_rule(bp, p.analysis.pf);
    rep.bound("padding.hiding_rule", rule.max_violation, kStateTol,
              "uniform padding over the support basis satisfies the hiding rule");

    const std::vector<Matrix> states = default_hiding_test_states(p.ctx.n(), rng, 8);
    double worst = 0.0;
    for (const Matrix &u : p.analysis.adjusted.gates()) {
        worst = std::max(worst, check_hiding_property(bp, bp, u, states).max_distance);
    }
    rep.bound("padding.hiding_property", worst, kFidelityTol,
              "padded outputs of every gate are indistinguishable from the padded input");

    const PaddingSolutionSpace space = solve_valid_paddings(p.analysis.pf);
    rep.bound("padding.solution_residual", space.residual, kStateTol, "hiding equations are consistent");
    rep.check("padding.contains_uniform", space.contains(bp) ? 0.0 : 1.0, kStateTol, space.contains(bp),
              "the support-basis uniform padding solves the hiding equations");
    Json weights = Json::object();
    for (const auto &[row, w] : bp.weights()) {
        weights[PauliString::from_row(p.ctx.n(), row).str()] = w;
    }
    rep.doc()["padding"] = {{"solution_dimension", space.dimension()},
                            {"unique", space.dimension() == 0},
                            {"uniform_weights", weights}};
}

double araki_lieb_margin(Rng &rng) {
    const QuantumState s = random_state({{"a", 1}, {"b", 2}, {"c", 2}}, rng);
    const std::vector<std::string> ab{"a", "b"}, a{"a"}, b{"b"};
    const double sab = von_neumann_entropy(partial_trace(s, ab));
    const double sa = von_neumann_entropy(partial_trace(s, a));
    const double sb = von_neumann_entropy(partial_trace(s, b));
    return std::min(sa + sb - sab, sab - std::abs(sa - sb));
}

double concavity_margin(Rng &rng) {
    const QuantumState s = random_state({{"a", 2}, {"b", 1}, {"c", 2}}, rng);
    const std::vector<std::string> b{"b"};
    const std::vector<size_t> a = s.qubits_of("a");
    double conditional = 0.0;
    for (const MeasurementResult &branch : measurement_branches(s, a, MeasurementBasis::computational(2))) {
        if (branch.probability > 1e-14) {
            conditional += branch.probability * von_neumann_entropy(partial_trace(branch.state, b));
        }
    }
    return von_neumann_entropy(partial_trace(s, b)) - conditional;
}

void suite_entropy(const Prepared &p, Rng rng, ReportBuilder &rep) {
    const size_t n = p.ctx.n();
    const std::vector<QuantumState> inputs{entangled_reference_state(n), random_state({{"psi", n}}, rng)};
    double rm_slack = std::numeric_limits<double>::infinity();
    double ps_slack = std::numeric_limits<double>::infinity();
    size_t rows = 0;
    for (const Matrix &u : p.analysis.adjusted.gates()) {
        for (const QuantumState &in : inputs) {
            const EntropyLedger rm = entropy_ledger(rm_ledger_stages(p.ctx, u, gates::identity(p.ctx.m()), in));
            for (const LedgerRow &r : rm.rows) {
                rm_slack = std::min(rm_slack, r.slack);
            }
            rows += rm.rows.size();
            if (p.ctx.m() <= 3) {
                const EntropyLedger ps = entropy_ledger(ps2_ledger_stages(p.ctx, u, in));
                for (const LedgerRow &r : ps.rows) {
                    ps_slack = std::min(ps_slack, r.slack);
                }
                rows += ps.rows.size();
            }
        }
    }
    rep.floor("entropy.ledger.rm", rm_slack, kEntropyTol,
              "each round raises the server entropy by at most the qubits received");
    if (std::isfinite(ps_slack)) {
        rep.floor("entropy.ledger.ps2", ps_slack, kEntropyTol,
                  "each round raises the server entropy by at most the qubits received");
    }

    double al = std::numeric_limits<double>::infinity();
    double cc = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 100; i++) {
        al = std::min(al, araki_lieb_margin(rng));
        cc = std::min(cc, concavity_margin(rng));
    }
    rep.floor("entropy.araki_lieb", al, kEntropyTol, "|S(A)-S(B)| <= S(AB) <= S(A)+S(B) on 100 random states");
    rep.floor("entropy.measurement_concavity", cc, kEntropyTol,
              "measuring a register cannot raise the average entropy of the rest (100 random states)");
    rep.doc()["entropy"] = {{"ledger_rows", rows}};
}

void suite_orthonormality(const Prepared &p, ReportBuilder &rep) {
    const uint64_t count = p.ctx.b.num_elements();
    double worst = 0.0;
    for (const Matrix &u : p.analysis.adjusted.gates()) {
        Matrix cols(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(count));
        for (uint64_t x = 0; x < count; x++) {
            cols.col(static_cast<Eigen::Index>(x)) = phi_state(p.ctx.b.dense_element(x) * u, p.ctx.b, p.ctx.st).amplitudes;
        }
        const Matrix gram = cols.adjoint() * cols;
        worst = std::max(worst, max_abs(gram - Matrix::Identity(gram.rows(), gram.cols())));
    }
    rep.bound("orthonormality.gram", worst, kGramTol, "the states phi of B_x U form an orthonormal basis");
}

void suite_resource_bound(const Prepared &p, ReportBuilder &rep) {
    const ResourceBoundReport r = resource_bound_experiment(p.analysis, gates::identity(p.ctx.m()));
    rep.bound("resource_bound.rho_entropy", std::abs(r.rho_entropy - static_cast<double>(r.r)), kEntropyTol,
              "the witness state has entropy r");
    rep.bound("resource_bound.final_entropy", std::abs(r.final_entropy - 2.0 * static_cast<double>(r.n)), kEntropyTol,
              "the server ends maximally mixed on 2n qubits");
    rep.bound("resource_bound.branch", r.max_branch_deviation, kStateTol,
              "every outcome branch is the padded witness");
    rep.bound("resource_bound.average", r.max_average_deviation, kStateTol,
              "the outcome average is I/2^{2n}");
    rep.check("resource_bound.cost", static_cast<double>(r.cost), 0.0, r.cost == r.bound,
              "communication cost equals 2n - r exactly");
    rep.doc()["resource_bound"] = {{"n", r.n}, {"r", r.r}, {"bound", r.bound}, {"cost", r.cost}};
}

}  // namespace

CommandOutput cmd_analyze(const FamilyConfig &config) {
    const GateFamily family = to_gate_family(config);
    const FamilyAnalysis a = analyze_family(family);
    const size_t n = family.num_qubits();
    const size_t r = a.pf.dim();
    ReportBuilder rep("analyze", family);
    Json &doc = rep.doc();
    doc["n"] = n;
    doc["preserved_subspace"] = paulis_json(a.pf.generator_paulis());
    doc["r"] = r;
    doc["support_basis"] = paulis_json(a.b.paulis());
    doc["dual_basis"] = paulis_json(a.q.paulis());
    doc["cost_qubits"] = a.cost();
    Json members = Json::array();
    for (size_t d = 0; d < family.size(); d++) {
        Json coeffs = Json::array();
        for (Complex c : decompose_in_b(a.adjusted.gate(d), a.b)) {
            coeffs.push_back(complex_json(c));
        }
        members.push_back({{"label", family.labels()[d]},
                           {"adjustment", PauliString::from_row(n, a.adjustments[d]).str()},
                           {"coefficients", coeffs}});
    }
    doc["members"] = members;
    if (a.b.size() > 0) {
        const StandardTransform st = standard_transformation(a.b);
        doc["standard_transform"] = {{"width", st.width}, {"images", paulis_json(st.images)},
                                     {"tableau", st.tableau.str()}};
    }
    rep.check("cost_equals_bound", static_cast<double>(a.cost()), 0.0, a.cost() == 2 * n - r,
              "communication cost equals 2n - r");
    return rep.finish();
}

CommandOutput cmd_run(const FamilyConfig &config, const RunOptions &options) {
    const Prepared p = prepare(config);
    Rng rng(options.seed);
    Rng psi_rng = rng.split(1);
    Rng run_rng = rng.split(2);
    const QuantumState psi = psi_source(options.psi, p.ctx.n(), psi_rng);
    const Matrix u = choose_gate(p, options.choice, options.theta);

    ReportBuilder rep("run", p.family);
    Json &doc = rep.doc();
    doc["mode"] = mode_name(options.mode);
    doc["choice"] = options.choice;
    if (options.theta) {
        doc["theta"] = *options.theta;
    }
    doc["seed"] = options.seed;
    doc["psi"] = options.psi;
    const size_t m = p.ctx.m();

    std::optional<double> fid;
    switch (options.mode) {
    case Mode::kReceiveMeasure: {
        const RmResult r = run_rm(p.ctx, u, gates::identity(m), psi, run_rng, forced_at(options.forced, 0));
        doc["rounds"] = rounds_json(r.transcript);
        doc["outcome"] = bitstring(r.outcome, m);
        doc["probability"] = r.probability;
        doc["padding"] = r.transcript.padding->str();
        double spread = 0.0;
        for (double q : r.outcome_probabilities) {
            spread = std::max(spread, std::abs(q - 1.0 / static_cast<double>(r.outcome_probabilities.size())));
        }
        rep.bound("run.outcome_uniform", spread, kStateTol, "every measurement outcome is equally likely");
        doc["qubits_sent"] = r.transcript.qubits_sent();
        fid = r.fidelity;
        break;
    }
    case Mode::kPrepareSendTwoRound: {
        Ps2Options o;
        o.x = forced_at(options.forced, 0);
        o.measured_y = forced_at(options.forced, 1);
        o.reported_y = forced_at(options.forced, 2);
        const Ps2Result r = run_ps_two_round(p.ctx, u, psi, run_rng, o);
        doc["rounds"] = rounds_json(r.transcript);
        doc["a"] = bitstring(r.a, m);
        doc["b"] = bitstring(r.b, m);
        doc["x"] = bitstring(r.x, m);
        doc["y"] = bitstring(r.y, m);
        doc["reported_y"] = bitstring(r.reported_y, m);
        doc["padding"] = r.transcript.padding->str();
        doc["qubits_sent"] = r.transcript.qubits_sent();
        rep.bound("run.intermediate_state", r.intermediate_deviation, kStateTol,
                  "after measuring y the server holds Q_y U Q_y^dagger applied to psi");
        if (r.reported_y == r.y) {
            rep.bound("run.lambda", r.lambda_deviation, kStateTol, "the correction turns the server state into B_x U psi");
        }
        fid = r.reported_y == r.y ? r.fidelity : std::nullopt;
        break;
    }
    case Mode::kPrepareSendSingleRound: {
        Matrix v_p = gates::identity(m);
        const StabilizerGroup g = phi_group(p.ctx, gates::identity(p.ctx.n()));
        const StabilizerGroup h = phi_group(p.ctx, u);
        if (unsigned_intersection_dim(g, h) == 0) {
            v_p = separable_v(g, h).to_dense().adjoint();
            doc["v_p"] = separable_v(g, h).inverse().str();
        } else {
            doc["v_p"] = "identity";
        }
        const Ps1Result r = run_ps_single_round(p.ctx, u, v_p, psi, run_rng, forced_at(options.forced, 0),
                                                forced_at(options.forced, 1));
        doc["rounds"] = rounds_json(r.transcript);
        doc["x"] = bitstring(r.x, m);
        doc["y"] = bitstring(r.y, m);
        doc["padding"] = r.predicted_padding.str();
        doc["qubits_sent"] = r.transcript.qubits_sent();
        fid = r.fidelity;
        break;
    }
    }
    if (fid) {
        doc["fidelity"] = *fid;
        rep.floor("run.fidelity", *fid - 1.0, kFidelityTol, "the server ends with the padded output P U psi");
    } else {
        doc["fidelity"] = nullptr;
    }
    return rep.finish();
}

std::optional<Suite> parse_suite(std::string_view name) {
    for (Suite s : {Suite::kBlindness, Suite::kPadding, Suite::kEntropy, Suite::kOrthonormality, Suite::kResourceBound,
                    Suite::kAll}) {
        if (suite_name(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

std::string suite_name(Suite suite) {
    switch (suite) {
    case Suite::kBlindness:
        return "blindness";
    case Suite::kPadding:
        return "padding";
    case Suite::kEntropy:
        return "entropy";
    case Suite::kOrthonormality:
        return "orthonormality";
    case Suite::kResourceBound:
        return "theorem1";
    case Suite::kAll:
        return "all";
    }
    return "unknown";
}

CommandOutput cmd_verify(const FamilyConfig &config, Suite suite, uint64_t seed) {
    const Prepared p = prepare(config);
    const Rng root(seed);
    ReportBuilder rep("verify", p.family);
    rep.doc()["suite"] = suite_name(suite);
    rep.doc()["seed"] = seed;
    const auto want = [suite](Suite s) { return suite == Suite::kAll || suite == s; };
    if (want(Suite::kBlindness)) {
        suite_blindness(p, root.split(1), rep);
    }
    if (want(Suite::kPadding)) {
        suite_padding(p, root.split(2), rep);
    }
    if (want(Suite::kEntropy)) {
        suite_entropy(p, root.split(3), rep);
    }
    if (want(Suite::kOrthonormality)) {
        suite_orthonormality(p, rep);
    }
    if (want(Suite::kResourceBound)) {
        suite_resource_bound(p, rep);
    }
    return rep.finish();
}

CommandOutput cmd_clifford(const FamilyConfig &config, const CliffordOptions &options) {
    const Prepared p = prepare(config);
    ReportBuilder rep("clifford", p.family);
    Json &doc = rep.doc();
    const GateFamily &adjusted = p.analysis.adjusted;
    if (options.choice == 0 || options.choice >= adjusted.size()) {
        throw ValidationError("choice must name a non-identity member of the family");
    }
    const Matrix &u = adjusted.gate(options.choice);
    doc["choice"] = options.choice;

    if (options.separable) {
        Json pairs = Json::array();
        const StabilizerGroup g = phi_group(p.ctx, adjusted.gate(0));
        for (size_t d = 1; d < adjusted.size(); d++) {
            const StabilizerGroup h = phi_group(p.ctx, adjusted.gate(d));
            Json j{{"label", p.family.labels()[d]},
                   {"identity_stabilizers", g.str()},
                   {"gate_stabilizers", h.str()},
                   {"shares_stabilizer", shares_stabilizer(g, h)},
                   {"unsigned_intersection", unsigned_intersection_dim(g, h)}};
            const size_t overlap = unsigned_intersection_dim(g, h);
            const bool shared = overlap > 0;
            rep.check("clifford.separable." + std::to_string(d), static_cast<double>(overlap), 0.0, !shared,
                      "the stabilizer groups of phi for I and the gate share no Pauli up to sign, so a separable V "
                      "exists");
            if (!shared) {
                const CliffordTableau v = separable_v(g, h);
                j["v"] = v.str();
                j["v_name"] = catalog_name(v.to_dense()).value_or(v.str());
            }
            pairs.push_back(std::move(j));
        }
        doc["separable"] = pairs;
    }
    if (options.enumerate) {
        const Matrix v = separable_measurement_v(p.ctx, u);
        Json table = Json::array();
        size_t uncataloged = 0;
        for (const FreeGate &f : enumerate_free_gates(p.ctx, v)) {
            table.push_back({{"bases", f.bases}, {"gate", f.name}, {"cataloged", f.cataloged}});
            uncataloged += f.cataloged ? 0 : 1;
        }
        doc["measurement_v"] = catalog_name(v).value_or(CliffordTableau::from_dense(v).str());
        doc["free_gates"] = table;
        doc["free_gate_count"] = table.size();
        doc["uncataloged_count"] = uncataloged;
    }
    return rep.finish();
}

}  // namespace blindgate

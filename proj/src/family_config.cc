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


#include "blindgate/family_config.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "blindgate/errors.h"

namespace blindgate {

using nlohmann::json;

namespace {

struct Primitive {
    size_t arity;
    bool takes_param;
};

const std::map<std::string, Primitive, std::less<>> &catalog() {
    static const std::map<std::string, Primitive, std::less<>> table{
        {"I", {1, false}},   {"X", {1, false}},  {"Y", {1, false}},  {"Z", {1, false}},
        {"H", {1, false}},   {"S", {1, false}},  {"Sdg", {1, false}}, {"T", {1, false}},
        {"Rz", {1, true}},   {"Rx", {1, true}},  {"CX", {2, false}}, {"CZ", {2, false}},
        {"SWAP", {2, false}},
    };
    return table;
}

Matrix primitive_matrix(const std::string &name, double param) {
    if (name == "I") return gates::identity(1);
    if (name == "X") return gates::x();
    if (name == "Y") return gates::y();
    if (name == "Z") return gates::z();
    if (name == "H") return gates::h();
    if (name == "S") return gates::s();
    if (name == "Sdg") return gates::sdg();
    if (name == "T") return gates::t();
    if (name == "Rz") return gates::rz(param);
    if (name == "Rx") return gates::rx(param);
    if (name == "CX") return gates::cx();
    if (name == "CZ") return gates::cz();
    if (name == "SWAP") return gates::swap();
    throw InvariantViolation("primitive missing from the catalog: " + name);
}

[[noreturn]] void fail(ConfigErrorCode code, const std::string &path, const std::string &message) {
    throw ConfigError(code, path, message);
}

void require_keys(const json &obj, const std::string &path, std::initializer_list<const char *> allowed) {
    if (!obj.is_object()) {
        fail(ConfigErrorCode::kSchema, path, "expected an object");
    }
    for (const auto &[key, value] : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char *k) { return key == k; }) == allowed.end()) {
            fail(ConfigErrorCode::kSchema, path + "/" + key, "unknown field \"" + key + "\"");
        }
    }
}

const json &field(const json &obj, const std::string &path, const char *key) {
    if (!obj.contains(key)) {
        fail(ConfigErrorCode::kSchema, path + "/" + key, std::string("missing field \"") + key + "\"");
    }
    return obj.at(key);
}

size_t as_count(const json &v, const std::string &path) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        fail(ConfigErrorCode::kSchema, path, "expected a non-negative integer");
    }
    return static_cast<size_t>(v.get<long long>());
}

double as_real(const json &v, const std::string &path, ConfigErrorCode code = ConfigErrorCode::kSchema) {
    if (!v.is_number()) {
        fail(code, path, "expected a number");
    }
    return v.get<double>();
}

Matrix parse_matrix(const json &v, const std::string &path, size_t arity) {
    const auto dim = Eigen::Index{1} << arity;
    if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != dim) {
        fail(ConfigErrorCode::kBadArity, path, "matrix must have " + std::to_string(dim) + " rows");
    }
    Matrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; r++) {
        const json &row = v[static_cast<size_t>(r)];
        const std::string rpath = path + "/" + std::to_string(r);
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
            fail(ConfigErrorCode::kBadArity, rpath, "matrix row must have " + std::to_string(dim) + " entries");
        }
        for (Eigen::Index c = 0; c < dim; c++) {
            const json &e = row[static_cast<size_t>(c)];
            const std::string epath = rpath + "/" + std::to_string(c);
            if (!e.is_array() || e.size() != 2) {
                fail(ConfigErrorCode::kSchema, epath, "matrix entries are [re, im] pairs");
            }
            m(r, c) = Complex(as_real(e[0], epath + "/0"), as_real(e[1], epath + "/1"));
        }
    }
    if (!is_unitary(m, 1e-8)) {
        fail(ConfigErrorCode::kNotUnitary, path, "matrix is not unitary");
    }
    return m;
}

GateStep parse_step(const json &v, const std::string &path, size_t n, bool allow_symbolic) {
    require_keys(v, path, {"name", "qubits", "param", "matrix"});
    const json &name = field(v, path, "name");
    if (!name.is_string()) {
        fail(ConfigErrorCode::kSchema, path + "/name", "gate name must be a string");
    }
    GateStep step;
    step.name = name.get<std::string>();

    const json &qubits = field(v, path, "qubits");
    if (!qubits.is_array()) {
        fail(ConfigErrorCode::kSchema, path + "/qubits", "qubits must be an array");
    }
    std::set<size_t> seen;
    for (size_t i = 0; i < qubits.size(); i++) {
        const std::string qpath = path + "/qubits/" + std::to_string(i);
        const size_t q = as_count(qubits[i], qpath);
        if (q >= n) {
            fail(ConfigErrorCode::kBadQubit, qpath, "qubit " + std::to_string(q) + " out of range");
        }
        if (!seen.insert(q).second) {
            fail(ConfigErrorCode::kBadQubit, qpath, "repeated qubit " + std::to_string(q));
        }
        step.qubits.push_back(q);
    }

    if (step.name == "matrix") {
        if (v.contains("param")) {
            fail(ConfigErrorCode::kBadParameter, path + "/param", "matrix blocks take no parameter");
        }
        if (step.qubits.empty()) {
            fail(ConfigErrorCode::kBadArity, path + "/qubits", "matrix block needs at least one qubit");
        }
        step.matrix = parse_matrix(field(v, path, "matrix"), path + "/matrix", step.qubits.size());
        return step;
    }

    const auto it = catalog().find(step.name);
    if (it == catalog().end()) {
        fail(ConfigErrorCode::kUnknownGate, path + "/name", "unknown gate \"" + step.name + "\"");
    }
    if (v.contains("matrix")) {
        fail(ConfigErrorCode::kSchema, path + "/matrix", "only matrix blocks carry a matrix");
    }
    if (step.qubits.size() != it->second.arity) {
        fail(ConfigErrorCode::kBadArity, path + "/qubits",
             step.name + " acts on " + std::to_string(it->second.arity) + " qubit(s)");
    }
    if (it->second.takes_param) {
        if (!v.contains("param")) {
            fail(ConfigErrorCode::kBadParameter, path + "/param", step.name + " needs a parameter");
        }
        const json &p = v.at("param");
        if (p.is_string()) {
            if (p.get<std::string>() != "theta" || !allow_symbolic) {
                fail(ConfigErrorCode::kBadParameter, path + "/param",
                     allow_symbolic ? "the only symbolic parameter is \"theta\""
                                    : "symbolic parameters are only allowed in a parametrized program");
            }
            step.symbolic = true;
        } else {
            step.param = as_real(p, path + "/param", ConfigErrorCode::kBadParameter);
        }
    } else if (v.contains("param")) {
        fail(ConfigErrorCode::kBadParameter, path + "/param", step.name + " takes no parameter");
    }
    return step;
}

GateProgram parse_program(const json &v, const std::string &path, size_t n, bool allow_symbolic) {
    if (!v.is_array()) {
        fail(ConfigErrorCode::kSchema, path, "a gate is an array of steps");
    }
    GateProgram program;
    for (size_t i = 0; i < v.size(); i++) {
        program.push_back(parse_step(v[i], path + "/" + std::to_string(i), n, allow_symbolic));
    }
    return program;
}

json step_json(const GateStep &s) {
    json out;
    out["name"] = s.name;
    out["qubits"] = s.qubits;
    if (s.symbolic) {
        out["param"] = "theta";
    } else if (s.param) {
        out["param"] = *s.param;
    }
    if (s.matrix) {
        json rows = json::array();
        for (Eigen::Index r = 0; r < s.matrix->rows(); r++) {
            json row = json::array();
            for (Eigen::Index c = 0; c < s.matrix->cols(); c++) {
                row.push_back({(*s.matrix)(r, c).real(), (*s.matrix)(r, c).imag()});
            }
            rows.push_back(row);
        }
        out["matrix"] = rows;
    }
    return out;
}

json program_json(const GateProgram &p) {
    json out = json::array();
    for (const GateStep &s : p) {
        out.push_back(step_json(s));
    }
    return out;
}

json parse_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        const size_t upto = std::min(e.byte, text.size());
        const size_t line = 1 + static_cast<size_t>(std::count(text.begin(), text.begin() + upto, '\n'));
        throw ConfigError(ConfigErrorCode::kSyntax, "", e.what(), line);
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(ConfigErrorCode::kSyntax, "", "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

std::string_view config_error_name(ConfigErrorCode code) {
    switch (code) {
    case ConfigErrorCode::kSyntax:
        return "syntax";
    case ConfigErrorCode::kSchema:
        return "schema";
    case ConfigErrorCode::kUnknownGate:
        return "unknown-gate";
    case ConfigErrorCode::kBadArity:
        return "bad-arity";
    case ConfigErrorCode::kBadQubit:
        return "bad-qubit";
    case ConfigErrorCode::kBadParameter:
        return "bad-parameter";
    case ConfigErrorCode::kNotUnitary:
        return "not-unitary";
    }
    return "unknown";
}

ConfigError::ConfigError(ConfigErrorCode code, std::string path, const std::string &message, size_t line)
    : std::runtime_error(std::string(config_error_name(code)) + " error" +
                         (line ? " at line " + std::to_string(line) : "") + (path.empty() ? "" : " at " + path) +
                         ": " + message),
      code_(code), path_(std::move(path)), line_(line) {}

FamilyConfig parse_family(std::string_view text) {
    const json root = parse_text(text);
    require_keys(root, "", {"n", "gates", "labels", "weights", "parametrized", "description"});
    FamilyConfig config;
    config.n = as_count(field(root, "", "n"), "/n");
    if (config.n == 0 || config.n > GateFamily::kMaxQubits) {
        fail(ConfigErrorCode::kSchema, "/n", "n must be between 1 and 5");
    }
    if (root.contains("gates")) {
        const json &gates = root.at("gates");
        if (!gates.is_array()) {
            fail(ConfigErrorCode::kSchema, "/gates", "gates must be an array");
        }
        for (size_t d = 0; d < gates.size(); d++) {
            config.gates.push_back(parse_program(gates[d], "/gates/" + std::to_string(d), config.n, false));
        }
    }
    if (root.contains("parametrized")) {
        const json &p = root.at("parametrized");
        require_keys(p, "/parametrized", {"program", "label", "probes"});
        ParametrizedSpec spec;
        spec.program = parse_program(field(p, "/parametrized", "program"), "/parametrized/program", config.n, true);
        if (p.contains("label")) {
            if (!p.at("label").is_string()) {
                fail(ConfigErrorCode::kSchema, "/parametrized/label", "label must be a string");
            }
            spec.label = p.at("label").get<std::string>();
        }
        if (p.contains("probes")) {
            const json &probes = p.at("probes");
            if (!probes.is_array() || probes.empty()) {
                fail(ConfigErrorCode::kSchema, "/parametrized/probes", "probes must be a non-empty array");
            }
            for (size_t i = 0; i < probes.size(); i++) {
                spec.probes.push_back(as_real(probes[i], "/parametrized/probes/" + std::to_string(i)));
            }
        }
        config.parametrized = std::move(spec);
        if (!config.gates.empty()) {
            fail(ConfigErrorCode::kSchema, "/gates", "give either gates or parametrized, not both");
        }
    } else if (config.gates.empty()) {
        fail(ConfigErrorCode::kSchema, "/gates", "missing field \"gates\"");
    }
    if (root.contains("labels")) {
        if (config.parametrized) {
            fail(ConfigErrorCode::kSchema, "/labels", "parametrized families are labelled automatically");
        }
        const json &labels = root.at("labels");
        if (!labels.is_array() || labels.size() != config.gates.size()) {
            fail(ConfigErrorCode::kSchema, "/labels", "labels must list one string per gate");
        }
        for (size_t i = 0; i < labels.size(); i++) {
            if (!labels[i].is_string()) {
                fail(ConfigErrorCode::kSchema, "/labels/" + std::to_string(i), "label must be a string");
            }
            config.labels.push_back(labels[i].get<std::string>());
        }
    }
    if (root.contains("weights")) {
        const json &weights = root.at("weights");
        if (!weights.is_array()) {
            fail(ConfigErrorCode::kSchema, "/weights", "weights must be an array");
        }
        for (size_t i = 0; i < weights.size(); i++) {
            config.weights.push_back(as_real(weights[i], "/weights/" + std::to_string(i)));
        }
    }
    return config;
}

FamilyConfig load_family(const std::string &path) {
    return parse_family(read_file(path));
}

std::string serialize_family(const FamilyConfig &config) {
    json root;
    root["n"] = config.n;
    if (!config.gates.empty()) {
        json gates = json::array();
        for (const GateProgram &p : config.gates) {
            gates.push_back(program_json(p));
        }
        root["gates"] = gates;
    }
    if (!config.labels.empty()) {
        root["labels"] = config.labels;
    }
    if (!config.weights.empty()) {
        root["weights"] = config.weights;
    }
    if (config.parametrized) {
        json p;
        p["program"] = program_json(config.parametrized->program);
        p["label"] = config.parametrized->label;
        if (!config.parametrized->probes.empty()) {
            p["probes"] = config.parametrized->probes;
        }
        root["parametrized"] = p;
    }
    return root.dump(2) + "\n";
}

Matrix program_unitary(size_t n, const GateProgram &program, std::optional<double> theta) {
    Matrix u = gates::identity(n);
    for (const GateStep &step : program) {
        Matrix local;
        if (step.matrix) {
            local = *step.matrix;
        } else {
            if (step.symbolic && !theta) {
                throw ValidationError("program has a symbolic parameter but no value was bound");
            }
            local = primitive_matrix(step.name, step.symbolic ? *theta : step.param.value_or(0.0));
        }
        u = embed(local, step.qubits, n) * u;
    }
    return u;
}

GateFamily to_gate_family(const FamilyConfig &config) {
    if (config.parametrized) {
        const size_t n = config.n;
        const GateProgram program = config.parametrized->program;
        ParametrizedGate gate{[n, program](double theta) { return program_unitary(n, program, theta); },
                              config.parametrized->label, config.parametrized->probes};
        GateFamily family = GateFamily::parametrized(n, std::move(gate));
        if (!config.weights.empty()) {
            family.set_weights(config.weights);
        }
        return family;
    }
    std::vector<Matrix> unitaries;
    for (const GateProgram &p : config.gates) {
        unitaries.push_back(program_unitary(config.n, p));
    }
    GateFamily family(config.n, std::move(unitaries), config.labels);
    if (!config.weights.empty()) {
        family.set_weights(config.weights);
    }
    return family;
}

QuantumState parse_state_fixture(std::string_view text) {
    const json root = parse_text(text);
    require_keys(root, "", {"layout", "amplitudes", "description"});
    const json &layout_json = field(root, "", "layout");
    if (!layout_json.is_array() || layout_json.empty()) {
        fail(ConfigErrorCode::kSchema, "/layout", "layout must be a non-empty array");
    }
    Layout layout;
    size_t total = 0;
    for (size_t i = 0; i < layout_json.size(); i++) {
        const std::string path = "/layout/" + std::to_string(i);
        require_keys(layout_json[i], path, {"name", "qubits"});
        const json &name = field(layout_json[i], path, "name");
        if (!name.is_string()) {
            fail(ConfigErrorCode::kSchema, path + "/name", "register name must be a string");
        }
        const size_t q = as_count(field(layout_json[i], path, "qubits"), path + "/qubits");
        layout.push_back({name.get<std::string>(), q});
        total += q;
    }
    if (total > QuantumState::kMaxPureQubits) {
        fail(ConfigErrorCode::kSchema, "/layout", "state is too large");
    }
    const uint64_t dim = uint64_t{1} << total;
    Vector amps = Vector::Zero(static_cast<Eigen::Index>(dim));
    const json &entries = field(root, "", "amplitudes");
    if (!entries.is_array()) {
        fail(ConfigErrorCode::kSchema, "/amplitudes", "amplitudes must be an array");
    }
    for (size_t i = 0; i < entries.size(); i++) {
        const std::string path = "/amplitudes/" + std::to_string(i);
        const json &e = entries[i];
        if (!e.is_array() || e.size() != 3) {
            fail(ConfigErrorCode::kSchema, path, "amplitude entries are [index, re, im]");
        }
        const size_t index = as_count(e[0], path + "/0");
        if (index >= dim) {
            fail(ConfigErrorCode::kSchema, path + "/0", "index out of range");
        }
        amps(static_cast<Eigen::Index>(index)) += Complex(as_real(e[1], path + "/1"), as_real(e[2], path + "/2"));
    }
    try {
        return QuantumState::pure(std::move(layout), std::move(amps));
    } catch (const std::invalid_argument &e) {
        fail(ConfigErrorCode::kSchema, "/amplitudes", e.what());
    }
}

QuantumState load_state_fixture(const std::string &path) {
    return parse_state_fixture(read_file(path));
}

}  // namespace blindgate

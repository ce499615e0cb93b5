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


#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blindgate/commands.h"
#include "blindgate/errors.h"
#include "blindgate/family_config.h"
#include "blindgate/protocols.h"
#include "blindgate/rng.h"
#include "blindgate/state.h"
#include "blindgate/subspaces.h"
#include "blindgate/tableau.h"

namespace py = pybind11;
using namespace blindgate;

namespace {

GateFamily family_of(const std::vector<Matrix> &gates) {
    if (gates.empty()) {
        throw ValidationError("a family needs at least one gate");
    }
    size_t n = 0;
    while ((Eigen::Index{1} << n) < gates.front().rows()) {
        n++;
    }
    return GateFamily(n, gates);
}

std::vector<std::string> strs(const std::vector<PauliString> &ps) {
    std::vector<std::string> out;
    for (const auto &p : ps) {
        out.push_back(p.str());
    }
    return out;
}

Mode parse_mode(const std::string &mode) {
    if (mode == "rm") return Mode::kReceiveMeasure;
    if (mode == "ps2") return Mode::kPrepareSendTwoRound;
    if (mode == "ps1") return Mode::kPrepareSendSingleRound;
    throw ValidationError("mode must be rm, ps2 or ps1");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Blind gate-hiding protocol engine";
    m.attr("__version__") = kEngineVersion;

    static py::exception<ConfigError> config_error(m, "ConfigError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const ConfigError &e) {
            const auto cls = py::reinterpret_borrow<py::object>(config_error.ptr());
            py::object err = cls(e.what());
            err.attr("code") = std::string(config_error_name(e.code()));
            err.attr("path") = e.path();
            err.attr("line") = e.line();
            PyErr_SetObject(config_error.ptr(), err.ptr());
        }
    });
    py::register_exception<NotCliffordError>(m, "NotCliffordError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);

    py::class_<PauliString>(m, "PauliString")
        .def(py::init(&PauliString::parse), py::arg("text"))
        .def_static("from_row", &PauliString::from_row, py::arg("n"), py::arg("row"), py::arg("phase") = 0)
        .def_property_readonly("n", &PauliString::num_qubits)
        .def_property_readonly("x", &PauliString::x)
        .def_property_readonly("z", &PauliString::z)
        .def_property_readonly("phase", &PauliString::phase)
        .def_property_readonly("row", &PauliString::row)
        .def("commutes", [](const PauliString &a, const PauliString &b) { return !commutator(a, b); })
        .def("to_matrix", [](const PauliString &p) { return dense_matrix(p); })
        .def("__mul__", [](const PauliString &a, const PauliString &b) { return a * b; })
        .def("__eq__", [](const PauliString &a, const PauliString &b) { return a == b; })
        .def("__str__", &PauliString::str)
        .def("__repr__", [](const PauliString &p) { return "PauliString('" + p.str() + "')"; });

    py::class_<CliffordTableau>(m, "CliffordTableau")
        .def_static("identity", &CliffordTableau::identity, py::arg("n"))
        .def_static("from_matrix", &CliffordTableau::from_dense, py::arg("u"))
        .def_static("random", [](size_t n, uint64_t seed) {
            Rng rng(seed);
            return CliffordTableau::random(n, rng);
        }, py::arg("n"), py::arg("seed"))
        .def_property_readonly("n", &CliffordTableau::num_qubits)
        .def("conjugate", &CliffordTableau::conjugate, py::arg("p"))
        .def("then", &CliffordTableau::then, py::arg("next"))
        .def("inverse", &CliffordTableau::inverse)
        .def("to_matrix", &CliffordTableau::to_dense)
        .def("__eq__", [](const CliffordTableau &a, const CliffordTableau &b) { return a == b; })
        .def("__str__", &CliffordTableau::str);

    m.def("preserved_subspace", [](const std::vector<Matrix> &gates) {
        return strs(preserved_subspace(family_of(gates)).generator_paulis());
    }, py::arg("gates"), "Generators of the Paulis every gate maps to plus or minus themselves.");
    m.def("support_basis", [](const std::vector<Matrix> &gates) {
        return strs(analyze_family(family_of(gates)).b.paulis());
    }, py::arg("gates"));
    m.def("adjusted_gates", [](const std::vector<Matrix> &gates) {
        return analyze_family(family_of(gates)).adjusted.gates();
    }, py::arg("gates"));
    m.def("decompose_in_basis", [](const Matrix &u, const std::vector<Matrix> &gates) {
        return decompose_in_b(u, analyze_family(family_of(gates)).b);
    }, py::arg("u"), py::arg("gates"));
    m.def("phi_state", [](const Matrix &u, const std::vector<Matrix> &gates, bool conjugated) {
        const FamilyAnalysis a = analyze_family(family_of(gates));
        return Vector(phi_state(u, a.b, standard_transformation(a.b), conjugated).amplitudes);
    }, py::arg("u"), py::arg("gates"), py::arg("conjugated") = false);
    m.def("von_neumann_entropy", py::overload_cast<const Matrix &>(&von_neumann_entropy), py::arg("rho"));

    m.def("canonical_family", [](const std::string &text) { return serialize_family(parse_family(text)); },
          py::arg("text"));
    m.def("analyze_json", [](const std::string &text) { return cmd_analyze(parse_family(text)).json; },
          py::arg("family"));
    m.def("run_json", [](const std::string &text, const std::string &mode, size_t choice, uint64_t seed,
                         const std::string &psi, const std::vector<uint64_t> &forced, std::optional<double> theta) {
        RunOptions o;
        o.mode = parse_mode(mode);
        o.choice = choice;
        o.seed = seed;
        o.psi = psi;
        o.forced = forced;
        o.theta = theta;
        return cmd_run(parse_family(text), o).json;
    }, py::arg("family"), py::arg("mode"), py::arg("choice"), py::arg("seed") = 1, py::arg("psi") = "zero",
       py::arg("forced") = std::vector<uint64_t>{}, py::arg("theta") = py::none());
    m.def("verify_json", [](const std::string &text, const std::string &suite, uint64_t seed) {
        const auto s = parse_suite(suite);
        if (!s) {
            throw ValidationError("unknown suite " + suite);
        }
        return cmd_verify(parse_family(text), *s, seed).json;
    }, py::arg("family"), py::arg("suite") = "all", py::arg("seed") = 1);
    m.def("clifford_json", [](const std::string &text, bool separable, bool enumerate, size_t choice) {
        return cmd_clifford(parse_family(text), CliffordOptions{separable, enumerate, choice}).json;
    }, py::arg("family"), py::arg("separable") = true, py::arg("enumerate") = false, py::arg("choice") = 1);
}

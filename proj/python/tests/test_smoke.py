# Copyright 2026 The Blindgate Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import json
from pathlib import Path

import jsonschema
import numpy as np
import pytest

import blindgate

ROOT = Path(__file__).resolve().parents[2]
FAMILIES = ROOT / "fixtures" / "families"
REPORT_SCHEMA = json.loads((ROOT / "schemas" / "report.schema.json").read_text())

I2 = np.eye(2, dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
X = np.array([[0, 1], [1, 0]], dtype=complex)
CX = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)


def test_pauli_product_matches_matrices():
    a, b = blindgate.PauliString("XZ"), blindgate.PauliString("YY")
    assert np.allclose((a * b).to_matrix(), a.to_matrix() @ b.to_matrix())
    assert a.commutes(b) == np.allclose(a.to_matrix() @ b.to_matrix(), b.to_matrix() @ a.to_matrix())


def test_tableau_round_trip():
    c = blindgate.CliffordTableau.random(2, 4)
    assert blindgate.CliffordTableau.from_matrix(c.to_matrix()) == c
    p = blindgate.PauliString("XY")
    u = c.to_matrix()
    assert np.allclose(c.conjugate(p).to_matrix(), u @ p.to_matrix() @ u.conj().T)


def test_subspaces_of_cnot():
    gates = [np.eye(4, dtype=complex), CX]
    assert blindgate.preserved_subspace(gates) == ["+ZI", "+IX"]
    assert blindgate.support_basis(gates) == ["+ZI", "+IX"]


def test_hadamard_decomposition():
    gates = [I2, H]
    adjusted = blindgate.adjusted_gates(gates)[1]
    assert np.allclose(adjusted, H @ X)
    c = blindgate.decompose_in_basis(adjusted, gates)
    assert np.allclose(c, [1 / np.sqrt(2), 1j / np.sqrt(2)], atol=1e-10)


def test_phi_state_is_normalised():
    phi = blindgate.phi_state(CX, [np.eye(4, dtype=complex), CX])
    assert np.isclose(np.linalg.norm(phi), 1.0)


def test_entropy_of_maximally_mixed_qubit():
    assert blindgate.von_neumann_entropy(I2 / 2) == pytest.approx(1.0)


def test_reports_validate_against_schema():
    family = FAMILIES / "cnot.json"
    for doc in (blindgate.analyze(family),
                blindgate.run(family, "ps2", choice=1, seed=3, psi="random"),
                blindgate.verify(family, "orthonormality"),
                blindgate.clifford(FAMILIES / "cz.json", enumerate=True)):
        jsonschema.validate(doc, REPORT_SCHEMA)
        assert doc["pass"] is True


def test_family_from_dict_and_canonical_form():
    family = {"n": 1, "gates": [[], [{"name": "H", "qubits": [0]}]]}
    assert blindgate.analyze(family)["r"] == 1
    text = blindgate.canonical_family(json.dumps(family))
    assert blindgate.canonical_family(text) == text


def test_config_error_carries_code_and_path():
    with pytest.raises(blindgate.ConfigError) as info:
        blindgate.analyze({"n": 1, "gates": [[{"name": "Q", "qubits": [0]}]]})
    assert info.value.code == "unknown-gate"
    assert info.value.path == "/gates/0/0/name"


def test_non_clifford_single_round_is_rejected():
    with pytest.raises(blindgate.NotCliffordError):
        blindgate.run(FAMILIES / "rz.json", "ps1", theta=0.4)


def test_clifford_member_of_rz_family_runs_single_round():
    doc = blindgate.run(FAMILIES / "rz.json", "ps1", theta=float(np.pi / 2), psi="random", seed=2)
    assert doc["fidelity"] == pytest.approx(1.0, abs=1e-9)

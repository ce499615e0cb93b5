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


"""Simulation and verification of blind gate-hiding protocols.

The report helpers take a gate-family JSON document (text, dict or path) and
return the parsed report dict.
"""

import json
import os

from ._core import (
    CliffordTableau,
    ConfigError,
    DimensionError,
    NotCliffordError,
    PauliString,
    ValidationError,
    __version__,
    adjusted_gates,
    canonical_family,
    decompose_in_basis,
    phi_state,
    preserved_subspace,
    support_basis,
    von_neumann_entropy,
)
from . import _core

__all__ = [
    "CliffordTableau",
    "ConfigError",
    "DimensionError",
    "NotCliffordError",
    "PauliString",
    "ValidationError",
    "__version__",
    "adjusted_gates",
    "analyze",
    "canonical_family",
    "clifford",
    "decompose_in_basis",
    "phi_state",
    "preserved_subspace",
    "run",
    "support_basis",
    "verify",
    "von_neumann_entropy",
]


def _family_text(family):
    if isinstance(family, dict):
        return json.dumps(family)
    if isinstance(family, os.PathLike) or (isinstance(family, str) and not family.lstrip().startswith("{")):
        with open(family, encoding="utf-8") as f:
            return f.read()
    return family


def analyze(family):
    return json.loads(_core.analyze_json(_family_text(family)))


def run(family, mode="rm", choice=0, seed=1, psi="zero", forced=(), theta=None):
    return json.loads(_core.run_json(_family_text(family), mode, choice, seed, psi, list(forced), theta))


def verify(family, suite="all", seed=1):
    return json.loads(_core.verify_json(_family_text(family), suite, seed))


def clifford(family, separable=True, enumerate=False, choice=1):
    return json.loads(_core.clifford_json(_family_text(family), separable, enumerate, choice))

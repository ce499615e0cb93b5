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
#include <utility>

#include "blindgate/errors.h"
#include "blindgate/protocols.h"

namespace blindgate {

StandardTransform standard_transformation(const BasisB &b) {
    StandardTransform st;
    st.n = b.num_qubits();
    st.m = b.size();
    st.width = std::max(st.n, st.m);
    if (st.width > 10) {
        throw ResourceError("standard transformation limited to 10 qubits");
    }
    if (st.m == 0) {
        st.tableau = CliffordTableau::identity(st.width);
        st.dense = gates::identity(st.width);
        return st;
    }
    std::vector<PauliString> sources;
    const PauliString pad(st.width - st.n);
    for (const PauliString &p : b.paulis()) {
        sources.push_back(tensor(p, pad));
    }
    for (size_t i = 0; i < st.m; i++) {
        st.images.emplace_back(st.width, uint64_t{1} << i, b.c_vectors()[i]);
    }
    st.tableau = clifford_mapping(sources, st.images);
    st.dense = st.tableau.to_dense();
    for (size_t i = 0; i < st.m; i++) {
        const Matrix lhs = st.dense * dense_matrix(sources[i]) * st.dense.adjoint();
        if (max_abs(lhs - dense_matrix(st.images[i])) > 1e-9) {
            throw InvariantViolation("standard transformation does not map B_" + std::to_string(i + 1));
        }
    }
    return st;
}

PhiState phi_state(const Matrix &u, const BasisB &b, const StandardTransform &st, bool conjugated) {
    const std::vector<Complex> gamma = decompose_in_b(u, b);
    const size_t m = b.size();
    Vector amps(Eigen::Index{1} << m);
    for (size_t z = 0; z < gamma.size(); z++) {
        amps(static_cast<Eigen::Index>(z)) = gamma[z];
    }

    // V_st (U (x) I) V_st^dagger |0> must be |phi_U> on the first m qubits and |0> elsewhere.
    const size_t extra = st.width - st.n;
    const Matrix lifted = kron(u, gates::identity(extra));
    const Vector image = st.dense * lifted * st.dense.adjoint().col(0);
    const Eigen::Index tail = Eigen::Index{1} << (st.width - m);
    double gap = 0.0;
    for (Eigen::Index i = 0; i < image.size(); i++) {
        const Complex expected = (i % tail == 0) ? amps(i / tail) : Complex{0.0, 0.0};
        gap = std::max(gap, std::abs(image(i) - expected));
    }
    if (gap > 1e-9) {
        throw InvariantViolation("phi state disagrees with the standard transformation");
    }
    if (conjugated) {
        amps = amps.conjugate();
    }
    return PhiState{std::move(amps), conjugated};
}

ProtocolContext ProtocolContext::from(const FamilyAnalysis &analysis) {
    return ProtocolContext{analysis.b, analysis.q, standard_transformation(analysis.b)};
}

std::string mode_name(Mode mode) {
    switch (mode) {
    case Mode::kReceiveMeasure:
        return "RM";
    case Mode::kPrepareSendTwoRound:
        return "PS2";
    case Mode::kPrepareSendSingleRound:
        return "PS1";
    }
    return "?";
}

size_t ProtocolTranscript::qubits_sent() const {
    size_t total = 0;
    for (const Round &r : rounds) {
        total += r.qubits;
    }
    return total;
}

size_t ProtocolTranscript::alice_to_bob_messages() const {
    size_t count = 0;
    for (const Round &r : rounds) {
        if (r.direction == Direction::kAliceToBob && (r.qubits > 0 || !r.classical.empty())) {
            count++;
        }
    }
    return count;
}

}  // namespace blindgate

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

#include <doctest.h>

#include "blindgate/errors.h"
#include "blindgate/tableau.h"
#include "oracle.h"

using namespace blindgate;

namespace {

Matrix on(const Matrix &g, std::vector<size_t> targets, size_t n) {
    return embed(g, targets, n);
}

}  // namespace

TEST_CASE("conjugation examples") {
    const auto h = CliffordTableau::from_dense(gates::h());
    CHECK(h.conjugate(PauliString::parse("Z")) == PauliString::parse("X"));
    const auto s = CliffordTableau::from_dense(gates::s());
    CHECK(s.conjugate(PauliString::parse("X")) == PauliString::parse("Y"));
    const auto cz = CliffordTableau::from_dense(gates::cz());
    CHECK(cz.conjugate(PauliString::parse("XI")) == PauliString::parse("XZ"));
    CHECK_THROWS_AS(cz.conjugate(PauliString::parse("X")), DimensionError);
}

TEST_CASE("non-Clifford input is rejected") {
    CHECK_THROWS_AS(CliffordTableau::from_dense(gates::t()), NotCliffordError);
}

TEST_CASE("random tableaus agree with their dense synthesis") {
    Rng rng(99);
    for (int trial = 0; trial < 200; trial++) {
        const size_t n = 1 + rng.below(3);
        const auto c = CliffordTableau::random(n, rng);
        CHECK(c.is_symplectic());
        const Matrix u = c.to_dense();
        REQUIRE(is_unitary(u, 1e-9));
        for (size_t q = 0; q < n; q++) {
            for (char kind : {'X', 'Z'}) {
                const PauliString g = PauliString::single(n, q, kind);
                const Matrix lhs = u * dense_matrix(g) * u.adjoint();
                CHECK(max_abs(lhs - dense_matrix(c.conjugate(g))) <= 1e-10);
            }
        }
        CHECK(CliffordTableau::from_dense(u) == c);
    }
}

TEST_CASE("conjugation of arbitrary strings is sign exact") {
    Rng rng(5);
    for (int trial = 0; trial < 300; trial++) {
        const size_t n = 1 + rng.below(3);
        const auto c = CliffordTableau::random(n, rng);
        const Matrix u = c.to_dense();
        const PauliString p(n, rng.next() & low_mask(n), rng.next() & low_mask(n), static_cast<int>(rng.below(4)));
        CHECK(max_abs(u * dense_matrix(p) * u.adjoint() - dense_matrix(c.conjugate(p))) <= 1e-10);
    }
}

TEST_CASE("composition and inverse") {
    Rng rng(17);
    for (int trial = 0; trial < 100; trial++) {
        const size_t n = 1 + rng.below(3);
        const auto a = CliffordTableau::random(n, rng);
        const auto b = CliffordTableau::random(n, rng);
        CHECK(matrices_equal_up_to_phase(a.then(b).to_dense(), b.to_dense() * a.to_dense()));
        CHECK(a.then(a.inverse()) == CliffordTableau::identity(n));
        CHECK(a.inverse().then(a) == CliffordTableau::identity(n));
    }
}

TEST_CASE("dense synthesis of named gates") {
    CHECK(matrices_equal_up_to_phase(CliffordTableau::from_dense(gates::cx()).to_dense(), gates::cx()));
    const Matrix circuit = on(gates::h(), {1}, 2) * on(gates::cx(), {1, 0}, 2);
    CHECK(matrices_equal_up_to_phase(CliffordTableau::from_dense(circuit).to_dense(), circuit));
}

TEST_CASE("clifford_mapping hits arbitrary commutation-consistent targets") {
    Rng rng(23);
    for (int trial = 0; trial < 100; trial++) {
        const size_t n = 1 + rng.below(3);
        const auto c = CliffordTableau::random(n, rng);
        const auto d = CliffordTableau::random(n, rng);
        // Images of a random independent set under two Cliffords share commutators.
        const size_t k = 1 + rng.below(2 * n);
        std::vector<PauliString> src, tgt;
        for (size_t i = 0; i < k; i++) {
            const PauliString g = i < n ? PauliString::single(n, i, 'X') : PauliString::single(n, i - n, 'Z');
            src.push_back(c.conjugate(g));
            tgt.push_back(d.conjugate(g));
        }
        const auto map = clifford_mapping(src, tgt);
        const Matrix u = map.to_dense();
        for (size_t i = 0; i < k; i++) {
            CHECK(map.conjugate(src[i]) == tgt[i]);
            CHECK(max_abs(u * dense_matrix(src[i]) * u.adjoint() - dense_matrix(tgt[i])) <= 1e-10);
        }
    }
}

TEST_CASE("clifford_mapping rejects mismatched commutation") {
    const std::vector<PauliString> src{PauliString::parse("X"), PauliString::parse("Z")};
    const std::vector<PauliString> tgt{PauliString::parse("XI"), PauliString::parse("ZZ")};
    CHECK_THROWS(clifford_mapping(src, std::vector<PauliString>{PauliString::parse("X"), PauliString::parse("X")}));
    CHECK_THROWS_AS(clifford_mapping(src, tgt), DimensionError);
}

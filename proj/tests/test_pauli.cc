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
#include "blindgate/gf2.h"
#include "blindgate/pauli.h"
#include "blindgate/rng.h"
#include "oracle.h"

using namespace blindgate;

namespace {

PauliString random_pauli(size_t n, Rng &rng) {
    return PauliString(n, rng.next() & low_mask(n), rng.next() & low_mask(n), static_cast<int>(rng.below(4)));
}

oracle::M oracle_of(const PauliString &p) {
    std::string letters;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        letters += p.letter(q);
    }
    return oracle::pauli(letters, p.phase());
}

}  // namespace

TEST_CASE("commutator examples") {
    CHECK(commutator(PauliString::parse("X"), PauliString::parse("Z")) == 1);
    CHECK(commutator(PauliString::parse("ZI"), PauliString::parse("IX")) == 0);
    CHECK(commutator(PauliString::parse("Y"), PauliString::parse("Y")) == 0);
    CHECK_THROWS_AS(commutator(PauliString::parse("X"), PauliString::parse("XX")), DimensionError);
}

TEST_CASE("multiply examples") {
    const PauliString xz = PauliString::parse("X") * PauliString::parse("Z");
    CHECK(xz == PauliString::parse("-iY"));
    CHECK(oracle::max_abs(dense_matrix(xz) - oracle::pauli("X") * oracle::pauli("Z")) < 1e-12);
    for (const char *s : {"X", "Y", "Z", "XYZ", "-YY"}) {
        const PauliString p = PauliString::parse(s);
        CHECK(p * p == PauliString(p.num_qubits()));
    }
    CHECK(PauliString::parse("ZI") * PauliString::parse("IX") == PauliString::parse("ZX"));
}

TEST_CASE("dense matrix examples") {
    CHECK(oracle::max_abs(dense_matrix(PauliString(1)) - oracle::M::Identity(2, 2)) == 0.0);
    oracle::M y(2, 2);
    y << 0, oracle::C(0, -1), oracle::C(0, 1), 0;
    CHECK(oracle::max_abs(dense_matrix(PauliString::parse("Y")) - y) == 0.0);
    CHECK(oracle::max_abs(dense_matrix(PauliString::parse("ZX")) - oracle::kron(oracle::pauli("Z"), oracle::pauli("X"))) ==
          0.0);
    CHECK_THROWS_AS(dense_matrix(PauliString(13)), ResourceError);
}

TEST_CASE("phase zero is the Hermitian representative") {
    for (uint64_t row = 0; row < 64; row++) {
        const Matrix d = dense_matrix(PauliString::from_row(3, row));
        CHECK(is_hermitian(d, 1e-14));
    }
}

TEST_CASE("commutator agrees with the dense oracle for all pairs up to 3 qubits") {
    for (size_t n = 1; n <= 3; n++) {
        for (uint64_t a = 0; a < (uint64_t{1} << (2 * n)); a++) {
            for (uint64_t b = 0; b < (uint64_t{1} << (2 * n)); b++) {
                const PauliString pa = PauliString::from_row(n, a);
                const PauliString pb = PauliString::from_row(n, b);
                const oracle::M da = oracle_of(pa), db = oracle_of(pb);
                const double sign = commutator(pa, pb) ? -1.0 : 1.0;
                CHECK(oracle::max_abs(da * db - sign * db * da) <= 1e-12);
            }
        }
    }
}

TEST_CASE("multiply is phase exact against the dense oracle") {
    Rng rng(2024);
    for (int trial = 0; trial < 1000; trial++) {
        const size_t n = 1 + rng.below(3);
        const PauliString a = random_pauli(n, rng);
        const PauliString b = random_pauli(n, rng);
        CHECK(oracle::max_abs(oracle_of(a * b) - oracle_of(a) * oracle_of(b)) <= 1e-12);
        CHECK(oracle::max_abs(dense_matrix(a) - oracle_of(a)) <= 1e-12);
    }
}

TEST_CASE("multiply is associative") {
    Rng rng(7);
    for (int trial = 0; trial < 300; trial++) {
        const size_t n = 1 + rng.below(4);
        const PauliString a = random_pauli(n, rng), b = random_pauli(n, rng), c = random_pauli(n, rng);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("text format round trip") {
    CHECK(PauliString::parse("-iZX").str() == "-iZX");
    CHECK(PauliString::parse("ZX").str() == "+ZX");
    CHECK(PauliString::parse("\xe2\x88\x92YI") == PauliString::parse("-YI"));
    Rng rng(1);
    for (int trial = 0; trial < 200; trial++) {
        const PauliString p = random_pauli(1 + rng.below(6), rng);
        CHECK(PauliString::parse(p.str()) == p);
    }
    CHECK_THROWS_AS(PauliString::parse("XQ"), ValidationError);
}

TEST_CASE("pauli_from_dense recovers phase-exact strings") {
    Rng rng(13);
    for (int trial = 0; trial < 200; trial++) {
        const PauliString p = random_pauli(1 + rng.below(3), rng);
        const auto back = pauli_from_dense(dense_matrix(p));
        REQUIRE(back.has_value());
        CHECK(*back == p);
    }
    Matrix h(2, 2);
    h << 1, 1, 1, -1;
    CHECK_FALSE(pauli_from_dense(h / std::sqrt(2.0)).has_value());
}

TEST_CASE("symplectic helpers") {
    const size_t n = 2;
    for (uint64_t a = 0; a < 16; a++) {
        for (uint64_t b = 0; b < 16; b++) {
            CHECK(symplectic_inner(n, a, b) ==
                  commutator(PauliString::from_row(n, a), PauliString::from_row(n, b)));
            CHECK(symplectic_inner(n, a, b) == parity(a & omega(n, b)));
        }
        CHECK(omega(n, omega(n, a)) == a);
    }
}

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

using namespace blindgate;

namespace {

Gf2Matrix random_matrix(size_t rows, size_t cols, Rng &rng) {
    Gf2Matrix m(0, cols);
    for (size_t r = 0; r < rows; r++) {
        m.append_row(rng.next() & low_mask(cols));
    }
    return m;
}

}  // namespace

TEST_CASE("rref is idempotent and keeps the row space") {
    Rng rng(11);
    for (int trial = 0; trial < 200; trial++) {
        const size_t rows = 1 + rng.below(6);
        const size_t cols = 1 + rng.below(8);
        const Gf2Matrix m = random_matrix(rows, cols, rng);
        const Gf2Matrix r = rref(m);
        CHECK(rref(r) == r);
        CHECK(r.rows() == rank(m));
        for (size_t i = 0; i < m.rows(); i++) {
            CHECK(in_row_space(r, m.row(i)));
        }
        for (size_t i = 0; i < r.rows(); i++) {
            CHECK(in_row_space(m, r.row(i)));
        }
    }
}

TEST_CASE("rref output depends only on the row space") {
    const Gf2Matrix a = Gf2Matrix::from_rows({0b0110, 0b0011}, 4);
    const Gf2Matrix b = Gf2Matrix::from_rows({0b0101, 0b0110, 0b0011}, 4);
    CHECK(rref(a) == rref(b));
    const std::vector<size_t> order{3, 2, 1, 0};
    CHECK(rref(a, order) == rref(b, order));
}

TEST_CASE("nullspace has the right size and is annihilated") {
    Rng rng(5);
    for (int trial = 0; trial < 200; trial++) {
        const size_t rows = rng.below(6);
        const size_t cols = 1 + rng.below(8);
        const Gf2Matrix m = random_matrix(rows, cols, rng);
        const Gf2Matrix ns = nullspace(m);
        CHECK(ns.rows() == cols - rank(m));
        CHECK(rank(ns) == ns.rows());
        for (size_t i = 0; i < ns.rows(); i++) {
            CHECK(m.apply(ns.row(i)) == 0);
        }
    }
}

TEST_CASE("nullspace of a zero row is the whole space") {
    const Gf2Matrix z(1, 4);
    CHECK(nullspace(z).rows() == 4);
}

TEST_CASE("solve finds solutions and detects inconsistency") {
    const Gf2Matrix m = Gf2Matrix::from_rows({0b011, 0b011}, 3);
    CHECK_FALSE(solve(m, 0b01).has_value());
    const auto v = solve(m, 0b11);
    REQUIRE(v.has_value());
    CHECK(m.apply(*v) == 0b11);

    Rng rng(9);
    for (int trial = 0; trial < 200; trial++) {
        const Gf2Matrix a = random_matrix(1 + rng.below(6), 1 + rng.below(8), rng);
        const uint64_t x = rng.next() & low_mask(a.cols());
        const uint64_t rhs = a.apply(x);
        const auto s = solve(a, rhs);
        REQUIRE(s.has_value());
        CHECK(a.apply(*s) == rhs);
    }
}

TEST_CASE("extend_to_full_basis keeps the input rows first") {
    const Gf2Matrix rows = Gf2Matrix::from_rows({0b0101, 0b0011}, 4);
    const Gf2Matrix full = extend_to_full_basis(rows);
    CHECK(full.rows() == 4);
    CHECK(full.row(0) == 0b0101);
    CHECK(full.row(1) == 0b0011);
    CHECK(rank(full) == 4);
    CHECK(inverse(full).has_value());
    CHECK_THROWS_AS(extend_to_full_basis(Gf2Matrix::from_rows({0b1, 0b1}, 2)), ValidationError);
}

TEST_CASE("inverse of random invertible matrices") {
    Rng rng(3);
    int found = 0;
    while (found < 50) {
        const size_t n = 1 + rng.below(8);
        const Gf2Matrix m = random_matrix(n, n, rng);
        const auto inv = inverse(m);
        CHECK(inv.has_value() == (rank(m) == n));
        if (inv) {
            CHECK(m * *inv == Gf2Matrix::identity(n));
            CHECK(*inv * m == Gf2Matrix::identity(n));
            found++;
        }
    }
}

TEST_CASE("dimension errors") {
    CHECK_THROWS_AS(Gf2Matrix(1, 65), ResourceError);
    CHECK_THROWS_AS(Gf2Matrix::from_rows({0b100}, 2), DimensionError);
    const Gf2Matrix a(2, 3), b(2, 3);
    CHECK_THROWS_AS(a * b, DimensionError);
}

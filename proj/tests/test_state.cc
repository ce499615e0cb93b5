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

#include <cmath>
#include <numbers>

#include "blindgate/errors.h"
#include "blindgate/state.h"
#include "oracle.h"

using namespace blindgate;

namespace {

const double kR = 1.0 / std::numbers::sqrt2;

Vector basis_vector(size_t dim, size_t i) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(i)) = 1.0;
    return v;
}

// Tr_B of a bipartite matrix with dims (da, db), keeping the first factor.
oracle::M trace_second(const oracle::M &rho, Eigen::Index da, Eigen::Index db) {
    oracle::M out = oracle::M::Zero(da, da);
    for (Eigen::Index i = 0; i < da; i++) {
        for (Eigen::Index j = 0; j < da; j++) {
            for (Eigen::Index k = 0; k < db; k++) {
                out(i, j) += rho(i * db + k, j * db + k);
            }
        }
    }
    return out;
}

oracle::M trace_first(const oracle::M &rho, Eigen::Index da, Eigen::Index db) {
    oracle::M out = oracle::M::Zero(db, db);
    for (Eigen::Index i = 0; i < db; i++) {
        for (Eigen::Index j = 0; j < db; j++) {
            for (Eigen::Index k = 0; k < da; k++) {
                out(i, j) += rho(k * db + i, k * db + j);
            }
        }
    }
    return out;
}

QuantumState random_mixed(Layout layout, size_t rank, Rng &rng) {
    size_t n = 0;
    for (const auto &r : layout) {
        n += r.qubits;
    }
    const size_t dim = size_t{1} << n;
    Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    double total = 0.0;
    for (size_t k = 0; k < rank; k++) {
        const double w = rng.uniform() + 0.05;
        const Vector v = haar_state(dim, rng);
        rho += w * v * v.adjoint();
        total += w;
    }
    return QuantumState::mixed(std::move(layout), rho / total);
}

}  // namespace

TEST_CASE("unitary application examples") {
    const QuantumState zero = QuantumState::zero({{"q", 1}});
    const std::vector<size_t> q0{0};
    CHECK(max_abs(Matrix(apply_unitary(zero, q0, gates::identity(1)).vector() - zero.vector())) < 1e-15);
    CHECK(max_abs(Matrix(apply_unitary(zero, q0, gates::x()).vector() - basis_vector(2, 1))) < 1e-15);

    Vector plus0 = Vector::Zero(4);
    plus0(0) = plus0(2) = kR;
    const QuantumState s = QuantumState::pure({{"a", 2}}, plus0);
    const std::vector<size_t> both{0, 1};
    const Vector bell = apply_unitary(s, both, gates::cx()).vector();
    CHECK(std::abs(bell(0) - kR) < 1e-15);
    CHECK(std::abs(bell(3) - kR) < 1e-15);
    CHECK(std::abs(bell(1)) + std::abs(bell(2)) < 1e-15);

    CHECK_THROWS_AS(apply_unitary(s, both, Matrix::Ones(4, 4)), ValidationError);
    const std::vector<size_t> bad{0, 0};
    CHECK_THROWS_AS(apply_unitary(s, bad, gates::cx()), DimensionError);
    const std::vector<size_t> out_of_range{2};
    CHECK_THROWS_AS(apply_unitary(s, out_of_range, gates::x()), DimensionError);
}

TEST_CASE("unitary application agrees with the kron oracle") {
    Rng rng(31);
    for (int t = 0; t < 50; t++) {
        const QuantumState psi = random_state({{"r", 3}}, rng);
        const Matrix u = haar_unitary(2, rng);
        const size_t q = rng.below(3);
        const std::vector<size_t> target{q};
        oracle::M full = oracle::M::Identity(1, 1);
        for (size_t i = 0; i < 3; i++) {
            full = oracle::kron(full, i == q ? oracle::M(u) : oracle::M::Identity(2, 2));
        }
        CHECK(max_abs(Matrix(apply_unitary(psi, target, u).vector() - full * psi.vector())) < 1e-12);

        const QuantumState rho = psi.to_mixed();
        const oracle::M expected = full * rho.density() * full.adjoint();
        CHECK(max_abs(Matrix(apply_unitary(rho, target, u).density() - expected)) < 1e-12);

        // Reversed targets equal the gate applied after swapping qubits 0 and 2.
        const Matrix v = haar_unitary(4, rng);
        const std::vector<size_t> reversed{2, 0}, swap02{0, 2};
        const QuantumState lhs = apply_unitary(psi, reversed, v);
        QuantumState rhs = apply_unitary(psi, swap02, gates::swap());
        rhs = apply_unitary(rhs, swap02, v);
        rhs = apply_unitary(rhs, swap02, gates::swap());
        CHECK(max_abs(Matrix(lhs.vector() - rhs.vector())) < 1e-12);
    }
}

TEST_CASE("controlled Pauli examples") {
    Rng rng(2);
    const QuantumState psi = random_state({{"psi", 1}}, rng);
    const QuantumState ctrl0 = tensor(QuantumState::zero({{"c", 1}}), psi);
    const std::vector<size_t> target{1};
    const QuantumState same = apply_controlled_pauli(ctrl0, 0, PauliString::parse("Z"), target);
    CHECK(max_abs(Matrix(same.vector() - ctrl0.vector())) < 1e-15);

    Vector plus(2);
    plus << kR, kR;
    const QuantumState start = tensor(QuantumState::pure({{"c", 1}}, plus), psi);
    const QuantumState out = apply_controlled_pauli(start, 0, PauliString::parse("Z"), target);
    Vector expected(4);
    expected << kR * psi.vector()(0), kR * psi.vector()(1), kR * psi.vector()(0), -kR * psi.vector()(1);
    CHECK(max_abs(Matrix(out.vector() - expected)) < 1e-15);

    const QuantumState noop = apply_controlled_pauli(start, 0, PauliString::parse("I"), target);
    CHECK(max_abs(Matrix(noop.vector() - start.vector())) < 1e-15);
    const std::vector<size_t> overlap{0};
    CHECK_THROWS_AS(apply_controlled_pauli(start, 0, PauliString::parse("Z"), overlap), DimensionError);

    // Phase-carrying Paulis against the dense projector form.
    for (int t = 0; t < 20; t++) {
        const QuantumState s = random_state({{"c", 1}, {"t", 2}}, rng);
        const PauliString p = PauliString(2, rng.below(4), rng.below(4), static_cast<int>(rng.below(4)));
        const std::vector<size_t> ts{1, 2};
        oracle::M p0 = oracle::M::Zero(2, 2), p1 = oracle::M::Zero(2, 2);
        p0(0, 0) = 1;
        p1(1, 1) = 1;
        const oracle::M full = oracle::kron(p0, oracle::M::Identity(4, 4)) + oracle::kron(p1, dense_matrix(p));
        CHECK(max_abs(Matrix(apply_controlled_pauli(s, 0, p, ts).vector() - full * s.vector())) < 1e-12);
    }
}

TEST_CASE("measurement examples") {
    const QuantumState one = QuantumState::pure({{"q", 1}}, basis_vector(2, 1));
    const std::vector<size_t> q0{0};
    Rng rng(1);
    const auto r = measure_in_basis(one, q0, MeasurementBasis::computational(1), rng);
    CHECK(r.outcome == 1);
    CHECK(std::abs(r.probability - 1.0) < 1e-15);
    CHECK(r.state.num_qubits() == 0);

    Matrix xb(2, 2);
    xb << kR, kR, kR, -kR;
    const auto branches = measurement_branches(QuantumState::zero({{"q", 1}}), q0, MeasurementBasis(xb));
    REQUIRE(branches.size() == 2);
    CHECK(std::abs(branches[0].probability - 0.5) < 1e-15);
    CHECK(std::abs(branches[1].probability - 0.5) < 1e-15);
    CHECK_THROWS_AS(measure_in_basis(one, q0, MeasurementBasis::computational(1), size_t{0}), ValidationError);
    CHECK_THROWS_AS(MeasurementBasis(Matrix::Ones(2, 2)), ValidationError);

    // Partial measurement keeps the other register, renormalised.
    const QuantumState two = tensor(QuantumState::zero({{"a", 1}}), one);
    const auto part = measure_in_basis(two, q0, MeasurementBasis::computational(1), size_t{0});
    CHECK(part.state.layout() == Layout{{"q", 1}});
    CHECK(max_abs(Matrix(part.state.vector() - basis_vector(2, 1))) < 1e-15);
}

TEST_CASE("sampled outcomes follow the Born rule") {
    Rng rng(77);
    Vector v(2);
    v << std::sqrt(0.2), std::sqrt(0.8);
    const QuantumState s = QuantumState::pure({{"q", 1}}, v);
    const std::vector<size_t> q0{0};
    int ones = 0;
    const int trials = 4000;
    for (int i = 0; i < trials; i++) {
        ones += static_cast<int>(measure_in_basis(s, q0, MeasurementBasis::computational(1), rng).outcome);
    }
    CHECK(std::abs(ones / static_cast<double>(trials) - 0.8) < 0.03);
}

TEST_CASE("partial trace against the index oracle") {
    Rng rng(12);
    for (int t = 0; t < 20; t++) {
        const QuantumState s = random_mixed({{"a", 1}, {"b", 2}}, 3, rng);
        const std::vector<std::string> keep_a{"a"}, keep_b{"b"};
        const Matrix ra = partial_trace(s, keep_a).density();
        const Matrix rb = partial_trace(s, keep_b).density();
        CHECK(max_abs(Matrix(ra - trace_second(s.density(), 2, 4))) < 1e-12);
        CHECK(max_abs(Matrix(rb - trace_first(s.density(), 2, 4))) < 1e-12);
        CHECK(std::abs(ra.trace() - 1.0) < 1e-10);
        CHECK(std::abs(rb.trace() - 1.0) < 1e-10);
    }
    const QuantumState s = QuantumState::zero({{"a", 1}});
    const std::vector<std::string> missing{"z"};
    CHECK_THROWS(partial_trace(s, missing));
}

TEST_CASE("entropy examples") {
    Rng rng(6);
    CHECK(std::abs(von_neumann_entropy(random_state({{"q", 3}}, rng))) < 1e-10);
    for (size_t m = 1; m <= 4; m++) {
        const Eigen::Index d = Eigen::Index{1} << m;
        CHECK(std::abs(von_neumann_entropy(Matrix(Matrix::Identity(d, d) / static_cast<double>(d))) - m) < 1e-12);
    }
    CHECK_THROWS_AS(von_neumann_entropy(Matrix(Matrix::Identity(2, 2))), ValidationError);
    Matrix neg = Matrix::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK_THROWS_AS(von_neumann_entropy(neg), ValidationError);
    for (int t = 0; t < 20; t++) {
        const QuantumState s = random_mixed({{"q", 2}}, 1 + rng.below(4), rng);
        CHECK(std::abs(von_neumann_entropy(s) - oracle::entropy(s.density())) < 1e-10);
    }
}

TEST_CASE("global phase equality") {
    Rng rng(9);
    const QuantumState a = random_state({{"q", 2}}, rng);
    const QuantumState b = QuantumState::pure({{"q", 2}}, std::polar(1.0, 0.7) * a.vector());
    CHECK(equal_up_to_global_phase(a, b));
    CHECK_FALSE(equal_up_to_global_phase(QuantumState::zero({{"q", 1}}),
                                         QuantumState::pure({{"q", 1}}, basis_vector(2, 1))));
}

TEST_CASE("state validation") {
    CHECK_THROWS_AS(QuantumState::pure({{"q", 1}}, Vector::Ones(2)), ValidationError);
    CHECK_THROWS_AS(QuantumState::pure({{"q", 2}}, basis_vector(2, 0)), DimensionError);
    CHECK_THROWS_AS(QuantumState::zero({{"q", 1}, {"q", 1}}), ValidationError);
    CHECK_THROWS_AS(QuantumState::zero({{"q", 15}}), ResourceError);
    Matrix bad = Matrix::Identity(2, 2);
    CHECK_THROWS_AS(QuantumState::mixed({{"q", 1}}, bad), ValidationError);
}

// Property suites.

TEST_CASE("measurement never increases average entropy") {
    Rng rng(101);
    for (int t = 0; t < 100; t++) {
        const QuantumState s = random_mixed({{"a", 1}, {"b", 2}}, 1 + rng.below(6), rng);
        const Matrix basis = haar_unitary(2, rng);
        const std::vector<size_t> target{rng.below(3)};
        // Measuring without learning the result is a dephasing channel on the whole system.
        const auto branches = measurement_branches(s, target, MeasurementBasis(basis));
        double avg = 0.0;
        for (const auto &b : branches) {
            avg += b.probability * von_neumann_entropy(b.state);
        }
        CHECK(von_neumann_entropy(s) + 1e-8 >= avg);
    }
}

TEST_CASE("Araki-Lieb on random tripartite pure states") {
    Rng rng(202);
    for (int t = 0; t < 100; t++) {
        const QuantumState s = random_state({{"a", 1 + rng.below(2)}, {"b", 1 + rng.below(2)}, {"c", 1}}, rng);
        const std::vector<std::string> ab{"a", "b"}, a{"a"}, b{"b"};
        const double sab = von_neumann_entropy(partial_trace(s, ab));
        const double sa = von_neumann_entropy(partial_trace(s, a));
        const double sb = von_neumann_entropy(partial_trace(s, b));
        CHECK(sab + sa + 1e-8 >= sb);
        CHECK(sab + sb + 1e-8 >= sa);
    }
}

TEST_CASE("entropy is unitarily invariant") {
    Rng rng(303);
    for (int t = 0; t < 50; t++) {
        const QuantumState s = random_mixed({{"q", 3}}, 1 + rng.below(8), rng);
        const std::vector<size_t> all{0, 1, 2};
        const QuantumState r = apply_unitary(s, all, haar_unitary(8, rng));
        CHECK(std::abs(von_neumann_entropy(r) - von_neumann_entropy(s)) < 1e-8);
    }
}

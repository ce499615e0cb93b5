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

#include "blindgate/pauli.h"

#include <cmath>

#include "blindgate/errors.h"

namespace blindgate {

std::vector<size_t> qubit_major_order(size_t n) {
    std::vector<size_t> order;
    order.reserve(2 * n);
    for (size_t q = 0; q < n; q++) {
        order.push_back(q);
        order.push_back(n + q);
    }
    return order;
}

PauliString::PauliString(size_t n, uint64_t x, uint64_t z, int phase)
    : n_(n), x_(x), z_(z), phase_(((phase % 4) + 4) % 4) {
    if (n > kMaxQubits) {
        throw ResourceError("PauliString supports at most 32 qubits");
    }
    if (((x | z) & ~low_mask(n)) != 0) {
        throw DimensionError("PauliString bits beyond qubit count");
    }
}

PauliString PauliString::from_row(size_t n, uint64_t row, int phase) {
    if (2 * n < 64 && (row >> (2 * n)) != 0) {
        throw DimensionError("symplectic row longer than 2n");
    }
    return PauliString(n, row & low_mask(n), (row >> n) & low_mask(n), phase);
}

PauliString PauliString::single(size_t n, size_t qubit, char kind) {
    if (qubit >= n) {
        throw DimensionError("qubit index out of range");
    }
    const uint64_t b = uint64_t{1} << qubit;
    switch (kind) {
        case 'I': return PauliString(n);
        case 'X': return PauliString(n, b, 0);
        case 'Y': return PauliString(n, b, b);
        case 'Z': return PauliString(n, 0, b);
        default: throw ValidationError(std::string("unknown Pauli letter '") + kind + "'");
    }
}

PauliString PauliString::parse(std::string_view text) {
    int phase = 0;
    std::string_view rest = text;
    if (rest.starts_with("\xe2\x88\x92")) {  // U+2212 minus sign
        phase = 2;
        rest.remove_prefix(3);
    } else if (rest.starts_with('-')) {
        phase = 2;
        rest.remove_prefix(1);
    } else if (rest.starts_with('+')) {
        rest.remove_prefix(1);
    }
    if (rest.starts_with('i')) {
        phase += 1;
        rest.remove_prefix(1);
    }
    if (rest.size() > kMaxQubits) {
        throw ResourceError("Pauli text longer than 32 qubits");
    }
    const size_t n = rest.size();
    uint64_t x = 0, z = 0;
    for (size_t q = 0; q < n; q++) {
        const uint64_t b = uint64_t{1} << q;
        switch (rest[q]) {
            case 'I': break;
            case 'X': x |= b; break;
            case 'Y': x |= b; z |= b; break;
            case 'Z': z |= b; break;
            default: throw ValidationError("malformed Pauli text '" + std::string(text) + "'");
        }
    }
    return PauliString(n, x, z, phase);
}

char PauliString::letter(size_t qubit) const {
    const bool xb = (x_ >> qubit) & 1;
    const bool zb = (z_ >> qubit) & 1;
    return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    for (size_t q = 0; q < n_; q++) {
        out += letter(q);
    }
    return out;
}

PauliString operator*(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("Pauli product of different widths");
    }
    const uint64_t x = a.x() ^ b.x();
    const uint64_t z = a.z() ^ b.z();
    // Move through the X_x Z_z form, where the product only picks up (-1)^{z_a . x_b}.
    const int phase = a.phase() + b.phase() + std::popcount(a.x() & a.z()) + std::popcount(b.x() & b.z()) +
                      2 * std::popcount(a.z() & b.x()) - std::popcount(x & z);
    return PauliString(a.num_qubits(), x, z, phase);
}

PauliString multiply(const PauliString &a, const PauliString &b) {
    return a * b;
}

bool commutator(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("commutator of different widths");
    }
    return parity((a.x() & b.z()) ^ (a.z() & b.x()));
}

PauliString tensor(const PauliString &a, const PauliString &b) {
    const size_t na = a.num_qubits();
    return PauliString(na + b.num_qubits(), a.x() | (b.x() << na), a.z() | (b.z() << na), a.phase() + b.phase());
}

uint64_t amplitude_mask(uint64_t qubit_bits, size_t n) {
    uint64_t out = 0;
    for (size_t q = 0; q < n; q++) {
        if ((qubit_bits >> q) & 1) {
            out |= qubit_bit(q, n);
        }
    }
    return out;
}

Matrix dense_matrix(const PauliString &p) {
    const size_t n = p.num_qubits();
    if (n > PauliString::kMaxDenseQubits) {
        throw ResourceError("dense Pauli matrix limited to 12 qubits");
    }
    const uint64_t dim = uint64_t{1} << n;
    const uint64_t xm = amplitude_mask(p.x(), n);
    const uint64_t zm = amplitude_mask(p.z(), n);
    const Complex scale = i_pow(p.phase() + std::popcount(p.x() & p.z()));
    Matrix m = Matrix::Zero(dim, dim);
    for (uint64_t c = 0; c < dim; c++) {
        m(c ^ xm, c) = parity(zm & c) ? -scale : scale;
    }
    return m;
}

std::optional<PauliString> pauli_from_dense(const Matrix &m, double tol) {
    const auto dim = static_cast<uint64_t>(m.rows());
    if (m.cols() != m.rows() || dim == 0 || !std::has_single_bit(dim)) {
        throw DimensionError("pauli_from_dense needs a square 2^n matrix");
    }
    const size_t n = std::countr_zero(dim);
    if (n > PauliString::kMaxDenseQubits) {
        throw ResourceError("dense Pauli matrix limited to 12 qubits");
    }
    Eigen::Index r0 = 0;
    m.col(0).cwiseAbs().maxCoeff(&r0);
    const uint64_t xm = static_cast<uint64_t>(r0);
    uint64_t x = 0, z = 0;
    for (size_t q = 0; q < n; q++) {
        const uint64_t b = qubit_bit(q, n);
        if (xm & b) {
            x |= uint64_t{1} << q;
        }
        // (-1)^{z_q} is the ratio of the entry in column b to the one in column 0.
        const Complex ratio = m(static_cast<Eigen::Index>(b ^ xm), static_cast<Eigen::Index>(b)) / m(r0, 0);
        if (ratio.real() < 0) {
            z |= uint64_t{1} << q;
        }
    }
    const Complex lead = m(r0, 0) / i_pow(std::popcount(x & z));
    int phase = 0;
    double best = 1e300;
    for (int k = 0; k < 4; k++) {
        const double d = std::abs(lead - i_pow(k));
        if (d < best) {
            best = d;
            phase = k;
        }
    }
    PauliString p(n, x, z, phase);
    if (max_abs(m - dense_matrix(p)) > tol) {
        return std::nullopt;
    }
    return p;
}

}  // namespace blindgate

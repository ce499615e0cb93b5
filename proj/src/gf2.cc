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

#include "blindgate/gf2.h"

#include <numeric>
#include <utility>

#include "blindgate/errors.h"

namespace blindgate {

Gf2Matrix::Gf2Matrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, 0) {
    if (cols > kMaxCols) {
        throw ResourceError("Gf2Matrix supports at most 64 columns");
    }
}

Gf2Matrix Gf2Matrix::from_rows(std::vector<uint64_t> rows, size_t cols) {
    Gf2Matrix m(0, cols);
    for (uint64_t r : rows) {
        m.append_row(r);
    }
    return m;
}

Gf2Matrix Gf2Matrix::identity(size_t n) {
    Gf2Matrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.rows_[i] = uint64_t{1} << i;
    }
    return m;
}

void Gf2Matrix::check_row(uint64_t bits) const {
    if (cols_ < 64 && (bits >> cols_) != 0) {
        throw DimensionError("Gf2Matrix row has bits beyond the column count");
    }
}

void Gf2Matrix::set(size_t r, size_t c, bool value) {
    if (c >= cols_) {
        throw DimensionError("Gf2Matrix::set column out of range");
    }
    uint64_t bit = uint64_t{1} << c;
    rows_[r] = value ? (rows_[r] | bit) : (rows_[r] & ~bit);
}

void Gf2Matrix::append_row(uint64_t bits) {
    check_row(bits);
    rows_.push_back(bits);
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows());
    for (size_t r = 0; r < rows(); r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                t.rows_[c] |= uint64_t{1} << r;
            }
        }
    }
    return t;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix &rhs) const {
    if (cols_ != rhs.rows()) {
        throw DimensionError("Gf2Matrix product: inner dimensions differ");
    }
    Gf2Matrix out(rows(), rhs.cols());
    for (size_t r = 0; r < rows(); r++) {
        uint64_t acc = 0;
        for (size_t k = 0; k < cols_; k++) {
            if (get(r, k)) {
                acc ^= rhs.rows_[k];
            }
        }
        out.rows_[r] = acc;
    }
    return out;
}

uint64_t Gf2Matrix::apply(uint64_t v) const {
    uint64_t out = 0;
    for (size_t r = 0; r < rows(); r++) {
        if (parity(rows_[r] & v)) {
            out |= uint64_t{1} << r;
        }
    }
    return out;
}

std::string Gf2Matrix::str() const {
    std::string out;
    for (size_t r = 0; r < rows(); r++) {
        if (r) {
            out += '\n';
        }
        for (size_t c = 0; c < cols_; c++) {
            out += get(r, c) ? '1' : '0';
        }
    }
    return out;
}

namespace {

std::vector<size_t> resolve_priority(size_t cols, std::span<const size_t> priority) {
    if (priority.empty()) {
        std::vector<size_t> order(cols);
        std::iota(order.begin(), order.end(), 0);
        return order;
    }
    if (priority.size() != cols) {
        throw DimensionError("column priority must list every column once");
    }
    uint64_t seen = 0;
    for (size_t c : priority) {
        if (c >= cols || ((seen >> c) & 1)) {
            throw DimensionError("column priority must be a permutation of the columns");
        }
        seen |= uint64_t{1} << c;
    }
    return {priority.begin(), priority.end()};
}

// Reduces `rows` in place (with a parallel right-hand side), returning pivot columns.
std::vector<size_t> eliminate(std::vector<uint64_t> &rows, std::vector<uint8_t> *rhs, const std::vector<size_t> &order) {
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t c : order) {
        uint64_t bit = uint64_t{1} << c;
        size_t found = next;
        while (found < rows.size() && !(rows[found] & bit)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        if (rhs) {
            std::swap((*rhs)[next], (*rhs)[found]);
        }
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && (rows[r] & bit)) {
                rows[r] ^= rows[next];
                if (rhs) {
                    (*rhs)[r] ^= (*rhs)[next];
                }
            }
        }
        pivots.push_back(c);
        next++;
        if (next == rows.size()) {
            break;
        }
    }
    return pivots;
}

}  // namespace

RrefResult rref_with_pivots(const Gf2Matrix &m, std::span<const size_t> column_priority) {
    auto order = resolve_priority(m.cols(), column_priority);
    std::vector<uint64_t> rows(m.row_words().begin(), m.row_words().end());
    auto pivots = eliminate(rows, nullptr, order);
    rows.resize(pivots.size());
    return {Gf2Matrix::from_rows(std::move(rows), m.cols()), std::move(pivots)};
}

Gf2Matrix rref(const Gf2Matrix &m, std::span<const size_t> column_priority) {
    return rref_with_pivots(m, column_priority).reduced;
}

size_t rank(const Gf2Matrix &m) {
    return rref_with_pivots(m).pivots.size();
}

Gf2Matrix nullspace(const Gf2Matrix &m) {
    auto [reduced, pivots] = rref_with_pivots(m);
    uint64_t pivot_mask = 0;
    for (size_t p : pivots) {
        pivot_mask |= uint64_t{1} << p;
    }
    Gf2Matrix out(0, m.cols());
    for (size_t f = 0; f < m.cols(); f++) {
        if ((pivot_mask >> f) & 1) {
            continue;
        }
        uint64_t v = uint64_t{1} << f;
        for (size_t i = 0; i < pivots.size(); i++) {
            if (reduced.get(i, f)) {
                v |= uint64_t{1} << pivots[i];
            }
        }
        out.append_row(v);
    }
    return rref(out);
}

std::optional<uint64_t> solve(const Gf2Matrix &m, uint64_t rhs) {
    std::vector<uint64_t> rows(m.row_words().begin(), m.row_words().end());
    std::vector<uint8_t> b(rows.size());
    for (size_t r = 0; r < rows.size(); r++) {
        b[r] = (rhs >> r) & 1;
    }
    auto order = resolve_priority(m.cols(), {});
    auto pivots = eliminate(rows, &b, order);
    for (size_t r = pivots.size(); r < rows.size(); r++) {
        if (b[r]) {
            return std::nullopt;
        }
    }
    uint64_t v = 0;
    for (size_t i = 0; i < pivots.size(); i++) {
        if (b[i]) {
            v |= uint64_t{1} << pivots[i];
        }
    }
    return v;
}

bool in_row_space(const Gf2Matrix &m, uint64_t v) {
    Gf2Matrix aug = m;
    aug.append_row(v);
    return rank(aug) == rank(m);
}

Gf2Matrix extend_to_full_basis(const Gf2Matrix &rows) {
    if (rank(rows) != rows.rows()) {
        throw ValidationError("extend_to_full_basis: input rows are dependent");
    }
    Gf2Matrix out = rows;
    for (size_t c = 0; c < rows.cols() && out.rows() < rows.cols(); c++) {
        uint64_t unit = uint64_t{1} << c;
        if (!in_row_space(out, unit)) {
            out.append_row(unit);
        }
    }
    return out;
}

std::optional<Gf2Matrix> inverse(const Gf2Matrix &m) {
    const size_t n = m.rows();
    if (m.cols() != n) {
        throw DimensionError("inverse: matrix is not square");
    }
    std::vector<uint64_t> a(m.row_words().begin(), m.row_words().end());
    std::vector<uint64_t> inv(n);
    for (size_t i = 0; i < n; i++) {
        inv[i] = uint64_t{1} << i;
    }
    for (size_t c = 0; c < n; c++) {
        uint64_t bit = uint64_t{1} << c;
        size_t p = c;
        while (p < n && !(a[p] & bit)) {
            p++;
        }
        if (p == n) {
            return std::nullopt;
        }
        std::swap(a[c], a[p]);
        std::swap(inv[c], inv[p]);
        for (size_t r = 0; r < n; r++) {
            if (r != c && (a[r] & bit)) {
                a[r] ^= a[c];
                inv[r] ^= inv[c];
            }
        }
    }
    return Gf2Matrix::from_rows(std::move(inv), n);
}

}  // namespace blindgate

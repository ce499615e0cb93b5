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

#ifndef BLINDGATE_GF2_H
#define BLINDGATE_GF2_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace blindgate {

inline bool parity(uint64_t v) {
    return std::popcount(v) & 1;
}

/// Dense binary matrix with one 64-bit word per row. Column c is bit c of the row word.
class Gf2Matrix {
  public:
    static constexpr size_t kMaxCols = 64;

    Gf2Matrix() = default;
    Gf2Matrix(size_t rows, size_t cols);

    static Gf2Matrix from_rows(std::vector<uint64_t> rows, size_t cols);
    static Gf2Matrix identity(size_t n);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const { return (rows_[r] >> c) & 1; }
    void set(size_t r, size_t c, bool value);
    uint64_t row(size_t r) const { return rows_[r]; }
    std::span<const uint64_t> row_words() const { return rows_; }
    void append_row(uint64_t bits);

    Gf2Matrix transpose() const;
    Gf2Matrix operator*(const Gf2Matrix &rhs) const;
    /// Matrix-vector product; bit i of the result is row i dotted with `v`.
    uint64_t apply(uint64_t v) const;

    bool operator==(const Gf2Matrix &other) const = default;

    /// Rows as '0'/'1' strings joined by '\n', column 0 first.
    std::string str() const;

  private:
    void check_row(uint64_t bits) const;

    size_t cols_ = 0;
    std::vector<uint64_t> rows_;
};

/// Reduced row echelon form. Zero rows are dropped, so `reduced.rows()` is the rank.
/// `column_priority` lists the order in which columns are tried as pivots (default: 0, 1, ...);
/// rows come out sorted by that order. For a fixed priority the result depends only on the row space.
struct RrefResult {
    Gf2Matrix reduced;
    std::vector<size_t> pivots;
};
RrefResult rref_with_pivots(const Gf2Matrix &m, std::span<const size_t> column_priority = {});
Gf2Matrix rref(const Gf2Matrix &m, std::span<const size_t> column_priority = {});

size_t rank(const Gf2Matrix &m);

/// Basis of {v : m v = 0}, as rows in reduced echelon form. Has cols - rank rows.
Gf2Matrix nullspace(const Gf2Matrix &m);

/// Some v with m v = rhs (bit i of rhs is the i-th equation), or nullopt if inconsistent.
/// Free variables are set to zero after reducing with pivots taken in column order.
std::optional<uint64_t> solve(const Gf2Matrix &m, uint64_t rhs);

bool in_row_space(const Gf2Matrix &m, uint64_t v);

/// Appends unit vectors (in column order) until the rows span the whole space.
/// Input rows must be independent; the returned square matrix starts with them.
Gf2Matrix extend_to_full_basis(const Gf2Matrix &rows);

std::optional<Gf2Matrix> inverse(const Gf2Matrix &m);

}  // namespace blindgate

#endif

// Copyright 2026 The phocs Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phocs {

/// Packed vector over F2. Storage is 0-indexed; text forms list coordinate 1 first.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t len);
    static BitVector unit(size_t len, size_t index);
    /// Parses a string over {0,1}.
    static BitVector from_string(std::string_view text);

    size_t size() const noexcept {
        return len_;
    }
    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool value);
    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    BitVector &operator^=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    BitVector &operator&=(const BitVector &other);
    BitVector operator&(const BitVector &other) const;
    bool operator==(const BitVector &other) const = default;

    bool is_zero() const noexcept;
    size_t popcount() const noexcept;
    /// Index of the lowest set coordinate, or size() when zero.
    size_t first_one() const noexcept;
    std::vector<size_t> ones() const;

    /// Inserts a coordinate before position `pos` (0 <= pos <= size()).
    void insert(size_t pos, bool value);
    void erase(size_t pos);
    void push_back(bool value) {
        insert(len_, value);
    }
    BitVector slice(size_t begin, size_t end) const;
    BitVector concat(const BitVector &tail) const;

    std::string to_string() const;
    uint64_t to_uint64() const;
    static BitVector from_uint64(size_t len, uint64_t value);

   private:
    size_t len_ = 0;
    std::vector<uint64_t> words_;
};

/// Inner product over F2.
bool dot(const BitVector &a, const BitVector &b);

/// Dense row-major matrix over F2.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);
    static BitMatrix identity(size_t n);
    static BitMatrix from_rows(const std::vector<std::string> &rows, size_t cols);
    static BitMatrix from_columns(const std::vector<BitVector> &columns, size_t rows);
    /// u v^T.
    static BitMatrix outer(const BitVector &u, const BitVector &v);

    size_t rows() const noexcept {
        return rows_;
    }
    size_t cols() const noexcept {
        return cols_;
    }
    bool get(size_t r, size_t c) const {
        return data_[r].get(c);
    }
    void set(size_t r, size_t c, bool value) {
        data_[r].set(c, value);
    }
    void flip(size_t r, size_t c) {
        data_[r].flip(c);
    }
    const BitVector &row(size_t r) const {
        return data_[r];
    }
    BitVector &row(size_t r) {
        return data_[r];
    }
    BitVector column(size_t c) const;
    void set_column(size_t c, const BitVector &v);

    bool operator==(const BitMatrix &other) const = default;
    BitMatrix &operator+=(const BitMatrix &other);
    BitMatrix operator+(const BitMatrix &other) const;
    BitMatrix operator*(const BitMatrix &other) const;
    BitVector operator*(const BitVector &v) const;
    /// v^T M, returned as a column vector (= M^T v).
    BitVector left_mul(const BitVector &v) const;

    BitMatrix transpose() const;
    bool is_zero() const;
    size_t rank() const;

    void insert_row(size_t pos);
    void insert_col(size_t pos);
    void erase_row(size_t pos);
    void erase_col(size_t pos);
    void append_row(const BitVector &row);
    BitMatrix select_rows(const std::vector<size_t> &indices) const;
    BitMatrix select_cols(const std::vector<size_t> &indices) const;

    /// Row strings, row 1 first, column 1 first character.
    std::vector<std::string> to_strings() const;
    std::string to_string() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<BitVector> data_;
};

/// Result of column reduction: reduced = m * transform, reduced is in reduced column echelon form.
struct ColumnReduction {
    BitMatrix reduced;
    BitMatrix transform;
    /// Pivot row of each nonzero column, increasing; column k of `reduced` has its pivot at profile[k].
    std::vector<size_t> profile;
};

ColumnReduction rref_with_transform(const BitMatrix &m);

/// Mechanical check that every column's leading one lies strictly below the previous one,
/// pivot rows are zero in all other columns, and zero columns trail.
bool is_reduced_column_echelon(const BitMatrix &m);

BitMatrix inverse(const BitMatrix &a);
BitMatrix inverse_transpose(const BitMatrix &a);

/// Some x with a x = b, if one exists.
std::optional<BitVector> solve(const BitMatrix &a, const BitVector &b);

/// Basis of {x : a x = 0}.
std::vector<BitVector> nullspace(const BitMatrix &a);

}  // namespace phocs

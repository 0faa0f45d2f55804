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

#include "phocs/f2.hpp"

#include <bit>
#include <utility>

#include "phocs/error.hpp"

namespace phocs {

namespace {

size_t word_count(size_t len) {
    return (len + 63) / 64;
}

}  // namespace

BitVector::BitVector(size_t len) : len_(len), words_(word_count(len), 0) {
}

BitVector BitVector::unit(size_t len, size_t index) {
    BitVector v(len);
    v.set(index, true);
    return v;
}

BitVector BitVector::from_string(std::string_view text) {
    BitVector v(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            v.set(i, true);
        } else if (text[i] != '0') {
            fail(ErrorCode::FormatError, "bit string contains '" + std::string(1, text[i]) + "'");
        }
    }
    return v;
}

void BitVector::set(size_t i, bool value) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.len_ != len_) {
        fail(ErrorCode::DimensionMismatch, "xor of vectors of length " + std::to_string(len_) + " and " +
                                               std::to_string(other.len_));
    }
    for (size_t k = 0; k < words_.size(); ++k) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector r = *this;
    r ^= other;
    return r;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    if (other.len_ != len_) {
        fail(ErrorCode::DimensionMismatch, "and of vectors of different length");
    }
    for (size_t k = 0; k < words_.size(); ++k) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVector BitVector::operator&(const BitVector &other) const {
    BitVector r = *this;
    r &= other;
    return r;
}

bool BitVector::is_zero() const noexcept {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

size_t BitVector::popcount() const noexcept {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

size_t BitVector::first_one() const noexcept {
    for (size_t k = 0; k < words_.size(); ++k) {
        if (words_[k]) {
            return k * 64 + std::countr_zero(words_[k]);
        }
    }
    return len_;
}

std::vector<size_t> BitVector::ones() const {
    std::vector<size_t> result;
    for (size_t i = 0; i < len_; ++i) {
        if (get(i)) {
            result.push_back(i);
        }
    }
    return result;
}

void BitVector::insert(size_t pos, bool value) {
    BitVector r(len_ + 1);
    for (size_t i = 0; i < pos; ++i) {
        r.set(i, get(i));
    }
    r.set(pos, value);
    for (size_t i = pos; i < len_; ++i) {
        r.set(i + 1, get(i));
    }
    *this = std::move(r);
}

void BitVector::erase(size_t pos) {
    BitVector r(len_ - 1);
    for (size_t i = 0, j = 0; i < len_; ++i) {
        if (i != pos) {
            r.set(j++, get(i));
        }
    }
    *this = std::move(r);
}

BitVector BitVector::slice(size_t begin, size_t end) const {
    BitVector r(end - begin);
    for (size_t i = begin; i < end; ++i) {
        r.set(i - begin, get(i));
    }
    return r;
}

BitVector BitVector::concat(const BitVector &tail) const {
    BitVector r(len_ + tail.len_);
    for (size_t i = 0; i < len_; ++i) {
        r.set(i, get(i));
    }
    for (size_t i = 0; i < tail.len_; ++i) {
        r.set(len_ + i, tail.get(i));
    }
    return r;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (size_t i = 0; i < len_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

uint64_t BitVector::to_uint64() const {
    return words_.empty() ? 0 : words_[0];
}

BitVector BitVector::from_uint64(size_t len, uint64_t value) {
    BitVector v(len);
    for (size_t i = 0; i < len && i < 64; ++i) {
        v.set(i, (value >> i) & 1);
    }
    return v;
}

bool dot(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size()) {
        fail(ErrorCode::DimensionMismatch,
             "inner product of lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    return (a & b).popcount() & 1;
}

BitMatrix::BitMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string> &rows, size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            fail(ErrorCode::FormatError, "row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                                             " columns, expected " + std::to_string(cols));
        }
        m.data_[r] = BitVector::from_string(rows[r]);
    }
    return m;
}

BitMatrix BitMatrix::from_columns(const std::vector<BitVector> &columns, size_t rows) {
    BitMatrix m(rows, columns.size());
    for (size_t c = 0; c < columns.size(); ++c) {
        m.set_column(c, columns[c]);
    }
    return m;
}

BitMatrix BitMatrix::outer(const BitVector &u, const BitVector &v) {
    BitMatrix m(u.size(), v.size());
    for (size_t r = 0; r < u.size(); ++r) {
        if (u.get(r)) {
            m.data_[r] = v;
        }
    }
    return m;
}

BitVector BitMatrix::column(size_t c) const {
    BitVector v(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        v.set(r, get(r, c));
    }
    return v;
}

void BitMatrix::set_column(size_t c, const BitVector &v) {
    if (v.size() != rows_) {
        fail(ErrorCode::DimensionMismatch, "column length mismatch");
    }
    for (size_t r = 0; r < rows_; ++r) {
        set(r, c, v.get(r));
    }
}

BitMatrix &BitMatrix::operator+=(const BitMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        fail(ErrorCode::DimensionMismatch, "matrix sum of mismatched shapes");
    }
    for (size_t r = 0; r < rows_; ++r) {
        data_[r] ^= other.data_[r];
    }
    return *this;
}

BitMatrix BitMatrix::operator+(const BitMatrix &other) const {
    BitMatrix m = *this;
    m += other;
    return m;
}

BitMatrix BitMatrix::operator*(const BitMatrix &other) const {
    if (cols_ != other.rows_) {
        fail(ErrorCode::DimensionMismatch, "matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                               " by " + std::to_string(other.rows_) + "x" +
                                               std::to_string(other.cols_));
    }
    BitMatrix m(rows_, other.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t k = 0; k < cols_; ++k) {
            if (get(r, k)) {
                m.data_[r] ^= other.data_[k];
            }
        }
    }
    return m;
}

BitVector BitMatrix::operator*(const BitVector &v) const {
    if (v.size() != cols_) {
        fail(ErrorCode::DimensionMismatch, "matrix-vector product dimension mismatch");
    }
    BitVector out(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        out.set(r, dot(data_[r], v));
    }
    return out;
}

BitVector BitMatrix::left_mul(const BitVector &v) const {
    if (v.size() != rows_) {
        fail(ErrorCode::DimensionMismatch, "vector-matrix product dimension mismatch");
    }
    BitVector out(cols_);
    for (size_t r = 0; r < rows_; ++r) {
        if (v.get(r)) {
            out ^= data_[r];
        }
    }
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

bool BitMatrix::is_zero() const {
    for (const auto &row : data_) {
        if (!row.is_zero()) {
            return false;
        }
    }
    return true;
}

size_t BitMatrix::rank() const {
    return rref_with_transform(*this).profile.size();
}

void BitMatrix::insert_row(size_t pos) {
    data_.insert(data_.begin() + static_cast<std::ptrdiff_t>(pos), BitVector(cols_));
    ++rows_;
}

void BitMatrix::insert_col(size_t pos) {
    for (auto &row : data_) {
        row.insert(pos, false);
    }
    ++cols_;
}

void BitMatrix::erase_row(size_t pos) {
    data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(pos));
    --rows_;
}

void BitMatrix::erase_col(size_t pos) {
    for (auto &row : data_) {
        row.erase(pos);
    }
    --cols_;
}

void BitMatrix::append_row(const BitVector &row) {
    if (row.size() != cols_) {
        fail(ErrorCode::DimensionMismatch, "appended row has wrong length");
    }
    data_.push_back(row);
    ++rows_;
}

BitMatrix BitMatrix::select_rows(const std::vector<size_t> &indices) const {
    BitMatrix m(indices.size(), cols_);
    for (size_t k = 0; k < indices.size(); ++k) {
        m.data_[k] = data_[indices[k]];
    }
    return m;
}

BitMatrix BitMatrix::select_cols(const std::vector<size_t> &indices) const {
    BitMatrix m(rows_, indices.size());
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t k = 0; k < indices.size(); ++k) {
            m.set(r, k, get(r, indices[k]));
        }
    }
    return m;
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (const auto &row : data_) {
        out.push_back(row.to_string());
    }
    return out;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (size_t r = 0; r < rows_; ++r) {
        if (r) {
            s += ';';
        }
        s += data_[r].to_string();
    }
    return s;
}

ColumnReduction rref_with_transform(const BitMatrix &m) {
    size_t rows = m.rows();
    size_t cols = m.cols();
    std::vector<BitVector> work;
    std::vector<BitVector> transform;
    for (size_t c = 0; c < cols; ++c) {
        work.push_back(m.column(c));
        transform.push_back(BitVector::unit(cols, c));
    }
    ColumnReduction out;
    size_t pivots = 0;
    for (size_t r = 0; r < rows && pivots < cols; ++r) {
        size_t found = cols;
        for (size_t c = pivots; c < cols; ++c) {
            if (work[c].get(r)) {
                found = c;
                break;
            }
        }
        if (found == cols) {
            continue;
        }
        std::swap(work[found], work[pivots]);
        std::swap(transform[found], transform[pivots]);
        for (size_t c = 0; c < cols; ++c) {
            if (c != pivots && work[c].get(r)) {
                work[c] ^= work[pivots];
                transform[c] ^= transform[pivots];
            }
        }
        out.profile.push_back(r);
        ++pivots;
    }
    out.reduced = BitMatrix::from_columns(work, rows);
    out.transform = BitMatrix::from_columns(transform, cols);
    return out;
}

bool is_reduced_column_echelon(const BitMatrix &m) {
    size_t previous_lead = 0;
    bool seen_zero = false;
    for (size_t c = 0; c < m.cols(); ++c) {
        BitVector col = m.column(c);
        if (col.is_zero()) {
            seen_zero = true;
            continue;
        }
        if (seen_zero) {
            return false;
        }
        size_t lead = col.first_one();
        if (c > 0 && lead <= previous_lead) {
            return false;
        }
        for (size_t other = 0; other < m.cols(); ++other) {
            if (other != c && m.get(lead, other)) {
                return false;
            }
        }
        previous_lead = lead;
    }
    return true;
}

BitMatrix inverse(const BitMatrix &a) {
    if (a.rows() != a.cols()) {
        fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
    }
    size_t n = a.rows();
    BitMatrix work = a;
    BitMatrix inv = BitMatrix::identity(n);
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = n;
        for (size_t r = c; r < n; ++r) {
            if (work.get(r, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) {
            fail(ErrorCode::SingularMatrix, "no pivot in column " + std::to_string(c + 1));
        }
        std::swap(work.row(pivot), work.row(c));
        std::swap(inv.row(pivot), inv.row(c));
        for (size_t r = 0; r < n; ++r) {
            if (r != c && work.get(r, c)) {
                work.row(r) ^= work.row(c);
                inv.row(r) ^= inv.row(c);
            }
        }
    }
    return inv;
}

BitMatrix inverse_transpose(const BitMatrix &a) {
    return inverse(a.transpose());
}

std::optional<BitVector> solve(const BitMatrix &a, const BitVector &b) {
    if (b.size() != a.rows()) {
        fail(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
    }
    size_t rows = a.rows();
    size_t cols = a.cols();
    BitMatrix work = a;
    BitVector rhs = b;
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = rows;
        for (size_t k = r; k < rows; ++k) {
            if (work.get(k, c)) {
                pivot = k;
                break;
            }
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(work.row(pivot), work.row(r));
        bool tmp = rhs.get(pivot);
        rhs.set(pivot, rhs.get(r));
        rhs.set(r, tmp);
        for (size_t k = 0; k < rows; ++k) {
            if (k != r && work.get(k, c)) {
                work.row(k) ^= work.row(r);
                if (rhs.get(r)) {
                    rhs.flip(k);
                }
            }
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (size_t k = r; k < rows; ++k) {
        if (rhs.get(k)) {
            return std::nullopt;
        }
    }
    BitVector x(cols);
    for (size_t k = 0; k < pivot_cols.size(); ++k) {
        x.set(pivot_cols[k], rhs.get(k));
    }
    return x;
}

std::vector<BitVector> nullspace(const BitMatrix &a) {
    size_t rows = a.rows();
    size_t cols = a.cols();
    BitMatrix work = a;
    std::vector<size_t> pivot_cols;
    std::vector<bool> is_pivot(cols, false);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = rows;
        for (size_t k = r; k < rows; ++k) {
            if (work.get(k, c)) {
                pivot = k;
                break;
            }
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(work.row(pivot), work.row(r));
        for (size_t k = 0; k < rows; ++k) {
            if (k != r && work.get(k, c)) {
                work.row(k) ^= work.row(r);
            }
        }
        pivot_cols.push_back(c);
        is_pivot[c] = true;
        ++r;
    }
    std::vector<BitVector> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector v(cols);
        v.set(free, true);
        for (size_t k = 0; k < pivot_cols.size(); ++k) {
            if (work.get(k, free)) {
                v.set(pivot_cols[k], true);
            }
        }
        basis.push_back(v);
    }
    return basis;
}

}  // namespace phocs

// Copyright 2026 The qclean Authors
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

#include "qclean/bitmatrix.h"

#include <algorithm>
#include <bit>

#include "qclean/errors.h"

namespace qclean {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); r++) {
        m.set_row(r, rows[r]);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); r++) {
        m.set_row(r, BitVector::from_string(rows[r]));
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVector> vs;
    for (auto s : rows) {
        vs.push_back(BitVector::from_string(s));
    }
    std::size_t cols = vs.empty() ? 0 : vs.front().size();
    return from_rows(vs, cols);
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    auto src = row_words(r);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
}

std::vector<BitVector> BitMatrix::row_vectors() const {
    std::vector<BitVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        out.push_back(row(r));
    }
    return out;
}

void BitMatrix::set_row(std::size_t r, const BitVector &v) {
    if (v.size() != cols_) {
        throw DimensionMismatch("row of length " + std::to_string(v.size()) + " in a matrix with " +
                                std::to_string(cols_) + " columns");
    }
    std::copy(v.words().begin(), v.words().end(), row_words(r).begin());
}

void BitMatrix::append_row(const BitVector &v) {
    data_.resize(data_.size() + stride_, 0);
    rows_++;
    set_row(rows_ - 1, v);
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    kernels::active().xor_into(data_.data() + dst * stride_, data_.data() + src * stride_, stride_);
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

bool BitMatrix::is_zero() const { return !kernels::active().any(data_.data(), data_.size()); }

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        auto words = row_words(r);
        for (std::size_t w = 0; w < stride_; w++) {
            word_t bits = words[w];
            while (bits != 0) {
                std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                t.set(c, r);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

BitVector BitMatrix::apply(const BitVector &x) const {
    if (x.size() != cols_) {
        throw DimensionMismatch("apply: vector of length " + std::to_string(x.size()) + " to a matrix with " +
                                std::to_string(cols_) + " columns");
    }
    const auto &k = kernels::active();
    BitVector y(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        if (k.dot_parity(data_.data() + r * stride_, x.words().data(), stride_)) {
            y.set(r);
        }
    }
    return y;
}

BitMatrix BitMatrix::operator*(const BitMatrix &other) const {
    if (cols_ != other.rows_) {
        throw DimensionMismatch("multiply: " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                                std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
    }
    const auto &k = kernels::active();
    BitMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; r++) {
        word_t *dst = out.data_.data() + r * out.stride_;
        auto words = row_words(r);
        for (std::size_t w = 0; w < stride_; w++) {
            word_t bits = words[w];
            while (bits != 0) {
                std::size_t j = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                k.xor_into(dst, other.data_.data() + j * other.stride_, out.stride_);
                bits &= bits - 1;
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::select_rows(std::span<const std::size_t> indices) const {
    BitMatrix out(indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); i++) {
        auto src = row_words(indices[i]);
        std::copy(src.begin(), src.end(), out.row_words(i).begin());
    }
    return out;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> indices) const {
    BitMatrix out(rows_, indices.size());
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t j = 0; j < indices.size(); j++) {
            if (get(r, indices[j])) out.set(r, j);
        }
    }
    return out;
}

BitMatrix BitMatrix::vstack(const BitMatrix &top, const BitMatrix &bottom) {
    if (top.cols_ != bottom.cols_) {
        throw DimensionMismatch("vstack: column counts " + std::to_string(top.cols_) + " and " +
                                std::to_string(bottom.cols_) + " differ");
    }
    BitMatrix out(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
    return out;
}

BitMatrix BitMatrix::hstack(const BitMatrix &left, const BitMatrix &right) {
    if (left.rows_ != right.rows_) {
        throw DimensionMismatch("hstack: row counts " + std::to_string(left.rows_) + " and " +
                                std::to_string(right.rows_) + " differ");
    }
    BitMatrix out(left.rows_, left.cols_ + right.cols_);
    for (std::size_t r = 0; r < left.rows_; r++) {
        out.set_row(r, BitVector::concat(left.row(r), right.row(r)));
    }
    return out;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; r++) {
        s += row(r).to_string();
        s += '\n';
    }
    return s;
}

}  // namespace qclean

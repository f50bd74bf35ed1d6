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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qclean/bitvector.h"

namespace qclean {

/// Dense matrix over F2 with rows packed into 64-bit words and stored
/// contiguously (row stride = words_for(cols)). Matrices act on column vectors
/// from the left. Zero-row and zero-column matrices are valid.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::span<const BitVector> rows, std::size_t cols);
    /// Each string is one row of '0'/'1' characters. `cols` is needed when the
    /// list is empty; otherwise it must match every row.
    static BitMatrix from_strings(std::span<const std::string> rows, std::size_t cols);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }
    bool empty() const { return rows_ == 0; }

    bool get(std::size_t r, std::size_t c) const {
        return ((data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1) != 0;
    }
    void set(std::size_t r, std::size_t c, bool value = true) {
        word_t &w = data_[r * stride_ + c / kWordBits];
        word_t mask = word_t{1} << (c % kWordBits);
        w = value ? (w | mask) : (w & ~mask);
    }

    std::span<word_t> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const word_t> row_words(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

    BitVector row(std::size_t r) const;
    std::vector<BitVector> row_vectors() const;
    void set_row(std::size_t r, const BitVector &v);
    void append_row(const BitVector &v);

    /// row[dst] ^= row[src].
    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    bool is_zero() const;
    BitMatrix transposed() const;
    /// this * x for a column vector x of length cols().
    BitVector apply(const BitVector &x) const;
    /// this * other; requires cols() == other.rows().
    BitMatrix operator*(const BitMatrix &other) const;

    BitMatrix select_rows(std::span<const std::size_t> indices) const;
    BitMatrix select_columns(std::span<const std::size_t> indices) const;
    static BitMatrix vstack(const BitMatrix &top, const BitMatrix &bottom);
    static BitMatrix hstack(const BitMatrix &left, const BitMatrix &right);

    /// Rows as '0'/'1' strings separated by newlines.
    std::string to_string() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<word_t> data_;
};

}  // namespace qclean

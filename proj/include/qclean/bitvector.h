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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qclean/kernels.h"

namespace qclean {

using kernels::word_t;

constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// A vector in F2^len, packed 64 coordinates per word. Bits past `len` are
/// always zero, so word-wise equality is coordinate-wise equality.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

    /// Parses a string of '0'/'1' characters; coordinate 0 is the first character.
    static BitVector from_string(std::string_view bits);
    static BitVector unit(std::size_t len, std::size_t index);
    /// Low `len` bits of `packed`, bit i = coordinate i. Requires len <= 64.
    static BitVector from_word(std::size_t len, word_t packed);
    static BitVector concat(const BitVector &head, const BitVector &tail);

    std::size_t size() const { return len_; }
    std::size_t num_words() const { return words_.size(); }
    std::span<const word_t> words() const { return words_; }
    std::span<word_t> words() { return words_; }

    bool get(std::size_t i) const { return ((words_[i / kWordBits] >> (i % kWordBits)) & 1) != 0; }
    void set(std::size_t i, bool value = true) {
        word_t mask = word_t{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= word_t{1} << (i % kWordBits); }

    bool is_zero() const;
    std::size_t popcount() const;
    /// Coordinates [begin, begin + len).
    BitVector slice(std::size_t begin, std::size_t len) const;
    /// Indices of set coordinates, ascending.
    std::vector<std::size_t> support() const;
    std::string to_string() const;

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector &b) { return a &= b; }

    bool operator==(const BitVector &other) const = default;
    /// Lexicographic on coordinates 0, 1, ... (0 < 1). Lengths compared first.
    bool operator<(const BitVector &other) const;

   private:
    std::size_t len_ = 0;
    std::vector<word_t> words_;
};

/// Standard dot product sum_i a_i b_i over F2.
bool dot(const BitVector &a, const BitVector &b);

}  // namespace qclean

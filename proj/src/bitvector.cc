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

#include "qclean/bitvector.h"

#include <algorithm>
#include <bit>

#include "qclean/errors.h"

namespace qclean {

namespace {

void require_same_length(const BitVector &a, const BitVector &b, const char *op) {
    if (a.size() != b.size()) {
        throw DimensionMismatch(std::string(op) + ": vector lengths " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()) + " differ");
    }
}

}  // namespace

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string contains '" + std::string(1, bits[i]) + "' at position " +
                                        std::to_string(i));
        }
    }
    return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t index) {
    BitVector v(len);
    v.set(index);
    return v;
}

BitVector BitVector::from_word(std::size_t len, word_t packed) {
    BitVector v(len);
    if (len > 0) {
        word_t mask = len >= kWordBits ? ~word_t{0} : ((word_t{1} << len) - 1);
        v.words_[0] = packed & mask;
    }
    return v;
}

BitVector BitVector::concat(const BitVector &head, const BitVector &tail) {
    BitVector out(head.size() + tail.size());
    std::copy(head.words_.begin(), head.words_.end(), out.words_.begin());
    if (head.size() % kWordBits == 0) {
        std::copy(tail.words_.begin(), tail.words_.end(), out.words_.begin() + static_cast<std::ptrdiff_t>(head.num_words()));
    } else {
        for (std::size_t i : tail.support()) {
            out.set(head.size() + i);
        }
    }
    return out;
}

bool BitVector::is_zero() const { return !kernels::active().any(words_.data(), words_.size()); }

std::size_t BitVector::popcount() const { return kernels::active().popcount(words_.data(), words_.size()); }

BitVector BitVector::slice(std::size_t begin, std::size_t len) const {
    if (begin + len > len_) {
        throw DimensionMismatch("slice [" + std::to_string(begin) + ", " + std::to_string(begin + len) +
                                ") out of range for length " + std::to_string(len_));
    }
    BitVector out(len);
    for (std::size_t i = 0; i < len; i++) {
        if (get(begin + i)) out.set(i);
    }
    return out;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); w++) {
        word_t bits = words_[w];
        while (bits != 0) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; i++) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require_same_length(*this, other, "xor");
    kernels::active().xor_into(words_.data(), other.words_.data(), words_.size());
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require_same_length(*this, other, "and");
    kernels::active().and_into(words_.data(), other.words_.data(), words_.size());
    return *this;
}

bool BitVector::operator<(const BitVector &other) const {
    if (len_ != other.len_) return len_ < other.len_;
    for (std::size_t w = 0; w < words_.size(); w++) {
        if (words_[w] != other.words_[w]) {
            // Lowest differing coordinate decides; the vector with 0 there is smaller.
            word_t diff = words_[w] ^ other.words_[w];
            word_t lowest = diff & (~diff + 1);
            return (words_[w] & lowest) == 0;
        }
    }
    return false;
}

bool dot(const BitVector &a, const BitVector &b) {
    require_same_length(a, b, "dot");
    return kernels::active().dot_parity(a.words().data(), b.words().data(), a.num_words());
}

}  // namespace qclean

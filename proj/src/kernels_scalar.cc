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

#include <bit>

#include "qclean/kernels.h"

namespace qclean::kernels {

namespace {

void xor_into(word_t *dst, const word_t *src, std::size_t n) {
    for (std::size_t i = 0; i < n; i++) {
        dst[i] ^= src[i];
    }
}

void and_into(word_t *dst, const word_t *src, std::size_t n) {
    for (std::size_t i = 0; i < n; i++) {
        dst[i] &= src[i];
    }
}

bool dot_parity(const word_t *a, const word_t *b, std::size_t n) {
    word_t acc = 0;
    for (std::size_t i = 0; i < n; i++) {
        acc ^= a[i] & b[i];
    }
    return (std::popcount(acc) & 1) != 0;
}

std::size_t popcount(const word_t *a, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; i++) {
        total += static_cast<std::size_t>(std::popcount(a[i]));
    }
    return total;
}

std::size_t or_popcount(const word_t *a, const word_t *b, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; i++) {
        total += static_cast<std::size_t>(std::popcount(a[i] | b[i]));
    }
    return total;
}

std::size_t and_popcount(const word_t *a, const word_t *b, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; i++) {
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    }
    return total;
}

bool any(const word_t *a, std::size_t n) {
    word_t acc = 0;
    for (std::size_t i = 0; i < n; i++) {
        acc |= a[i];
    }
    return acc != 0;
}

constexpr KernelTable kScalar{
    Isa::scalar, xor_into, and_into, dot_parity, popcount, or_popcount, and_popcount, any,
};

}  // namespace

const KernelTable &scalar_kernels() { return kScalar; }

}  // namespace qclean::kernels

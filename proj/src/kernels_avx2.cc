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

#include "kernels_internal.h"

#if defined(QCLEAN_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

namespace qclean::kernels::detail {

namespace {

// 4 x 64-bit words per 256-bit lane group.
constexpr std::size_t kStep = 4;

inline __m256i load(const word_t *p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(p)); }
inline void store(word_t *p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i *>(p), v); }

// Per-64-bit-lane popcount via nibble lookup (Mula, Kurz, Lemire).
inline __m256i popcount_lanes(__m256i v) {
    const __m256i lookup =
        _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::size_t hsum(__m256i v) {
    alignas(32) word_t lanes[kStep];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), v);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

void xor_into(word_t *dst, const word_t *src, std::size_t n) {
    std::size_t i = 0;
    for (; i + kStep <= n; i += kStep) {
        store(dst + i, _mm256_xor_si256(load(dst + i), load(src + i)));
    }
    for (; i < n; i++) {
        dst[i] ^= src[i];
    }
}

void and_into(word_t *dst, const word_t *src, std::size_t n) {
    std::size_t i = 0;
    for (; i + kStep <= n; i += kStep) {
        store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
    }
    for (; i < n; i++) {
        dst[i] &= src[i];
    }
}

bool dot_parity(const word_t *a, const word_t *b, std::size_t n) {
    // parity(popcount(x)) is additive under xor, so fold everything into one word.
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kStep <= n; i += kStep) {
        acc = _mm256_xor_si256(acc, _mm256_and_si256(load(a + i), load(b + i)));
    }
    alignas(32) word_t lanes[kStep];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), acc);
    word_t folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; i < n; i++) {
        folded ^= a[i] & b[i];
    }
    return (std::popcount(folded) & 1) != 0;
}

std::size_t popcount(const word_t *a, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kStep <= n; i += kStep) {
        acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
    }
    std::size_t total = hsum(acc);
    for (; i < n; i++) {
        total += static_cast<std::size_t>(std::popcount(a[i]));
    }
    return total;
}

std::size_t or_popcount(const word_t *a, const word_t *b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kStep <= n; i += kStep) {
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_or_si256(load(a + i), load(b + i))));
    }
    std::size_t total = hsum(acc);
    for (; i < n; i++) {
        total += static_cast<std::size_t>(std::popcount(a[i] | b[i]));
    }
    return total;
}

std::size_t and_popcount(const word_t *a, const word_t *b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kStep <= n; i += kStep) {
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
    }
    std::size_t total = hsum(acc);
    for (; i < n; i++) {
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    }
    return total;
}

bool any(const word_t *a, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kStep <= n; i += kStep) {
        acc = _mm256_or_si256(acc, load(a + i));
    }
    word_t tail = 0;
    for (; i < n; i++) {
        tail |= a[i];
    }
    return tail != 0 || !_mm256_testz_si256(acc, acc);
}

constexpr KernelTable kAvx2{
    Isa::avx2, xor_into, and_into, dot_parity, popcount, or_popcount, and_popcount, any,
};

}  // namespace

const KernelTable *avx2_table() { return &kAvx2; }

}  // namespace qclean::kernels::detail

#else

namespace qclean::kernels::detail {
const KernelTable *avx2_table() { return nullptr; }
}  // namespace qclean::kernels::detail

#endif

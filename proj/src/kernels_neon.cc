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

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include <bit>

namespace qclean::kernels::detail {

namespace {

constexpr std::size_t kStep = 2;

inline std::size_t lane_popcount(uint64x2_t v) {
    uint8x16_t counts = vcntq_u8(vreinterpretq_u8_u64(v));
    return static_cast<std::size_t>(vaddvq_u8(counts));
}

void xor_into(word_t *dst, const word_t *src, std::size_t n) {
    std::size_t i = 0;
    for (; i + kStep <= n; i += kStep) {
        vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    }
    for (; i < n; i++) {
        dst[i] ^= src[i];
    }
}

void and_into(word_t *dst, const word_t *src, std::size_t n) {
    std::size_t i = 0;
    for (; i + kStep <= n; i += kStep) {
        vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    }
    for (; i < n; i++) {
        dst[i] &= src[i];
    }
}

bool dot_parity(const word_t *a, const word_t *b, std::size_t n) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + kStep <= n; i += kStep) {
        acc = veorq_u64(acc, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    }
    word_t folded = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
    for (; i < n; i++) {
        folded ^= a[i] & b[i];
    }
    return (std::popcount(folded) & 1) != 0;
}

std::size_t popcount(const word_t *a, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + kStep <= n; i += kStep) {
        total += lane_popcount(vld1q_u64(a + i));
    }
    for (; i < n; i++) {
        total += static_cast<std::size_t>(std::popcount(a[i]));
    }
    return total;
}

std::size_t or_popcount(const word_t *a, const word_t *b, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + kStep <= n; i += kStep) {
        total += lane_popcount(vorrq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    }
    for (; i < n; i++) {
        total += static_cast<std::size_t>(std::popcount(a[i] | b[i]));
    }
    return total;
}

std::size_t and_popcount(const word_t *a, const word_t *b, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + kStep <= n; i += kStep) {
        total += lane_popcount(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    }
    for (; i < n; i++) {
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    }
    return total;
}

bool any(const word_t *a, std::size_t n) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + kStep <= n; i += kStep) {
        acc = vorrq_u64(acc, vld1q_u64(a + i));
    }
    word_t folded = vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1);
    for (; i < n; i++) {
        folded |= a[i];
    }
    return folded != 0;
}

constexpr KernelTable kNeon{
    Isa::neon, xor_into, and_into, dot_parity, popcount, or_popcount, and_popcount, any,
};

}  // namespace

const KernelTable *neon_table() { return &kNeon; }

}  // namespace qclean::kernels::detail

#else

namespace qclean::kernels::detail {
const KernelTable *neon_table() { return nullptr; }
}  // namespace qclean::kernels::detail

#endif

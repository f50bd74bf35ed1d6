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

// Word-parallel inner loops over packed GF(2) data.
//
// Every kernel has a portable scalar reference implementation. Vector variants
// (AVX2 on x86-64, NEON on AArch64) are compiled into separate translation units
// and selected once at runtime. All variants must produce bit-identical results;
// tests/test_kernels.cc checks each available variant against the scalar one.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace qclean::kernels {

using word_t = std::uint64_t;

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

struct KernelTable {
    Isa isa;
    /// dst[i] ^= src[i] for i < n.
    void (*xor_into)(word_t *dst, const word_t *src, std::size_t n);
    /// dst[i] &= src[i] for i < n.
    void (*and_into)(word_t *dst, const word_t *src, std::size_t n);
    /// Parity of popcount(a & b): the dot product over F2.
    bool (*dot_parity)(const word_t *a, const word_t *b, std::size_t n);
    /// Total number of set bits.
    std::size_t (*popcount)(const word_t *a, std::size_t n);
    /// popcount(a | b). With a = x-block and b = z-block this is the qubit weight.
    std::size_t (*or_popcount)(const word_t *a, const word_t *b, std::size_t n);
    /// popcount(a & b).
    std::size_t (*and_popcount)(const word_t *a, const word_t *b, std::size_t n);
    /// True iff any word is nonzero.
    bool (*any)(const word_t *a, std::size_t n);
};

const KernelTable &scalar_kernels();

/// The variant for `isa`, or nullopt when it is not compiled in or the CPU lacks it.
std::optional<KernelTable> kernels_for(Isa isa);

/// The table used by the library. Chosen on first use: the QCLEAN_ISA environment
/// variable (scalar|avx2|neon) if set and available, else the widest supported ISA.
const KernelTable &active();

}  // namespace qclean::kernels

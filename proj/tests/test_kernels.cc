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

#include <cstdint>
#include <vector>

#include "doctest.h"
#include "qclean/generators.h"
#include "qclean/kernels.h"

using namespace qclean;
using namespace qclean::kernels;

namespace {

std::vector<word_t> random_words(std::size_t n, SplitMix64 &rng) {
    std::vector<word_t> out(n);
    for (auto &w : out) w = rng.next();
    return out;
}

std::vector<KernelTable> vector_variants() {
    std::vector<KernelTable> out;
    for (auto isa : {Isa::avx2, Isa::neon}) {
        if (auto t = kernels_for(isa)) out.push_back(*t);
    }
    return out;
}

}  // namespace

TEST_CASE("scalar kernels on hand-checked words") {
    const auto &k = scalar_kernels();
    std::vector<word_t> a{0b1011, ~word_t{0}}, b{0b0110, 1};
    CHECK(k.popcount(a.data(), 2) == 67);
    CHECK(k.and_popcount(a.data(), b.data(), 2) == 2);
    CHECK(k.or_popcount(a.data(), b.data(), 2) == 68);
    CHECK(k.dot_parity(a.data(), b.data(), 2) == false);
    CHECK(k.any(b.data(), 2));
    k.xor_into(a.data(), b.data(), 2);
    CHECK(a[0] == 0b1101);
    CHECK(a[1] == ~word_t{1});
    k.and_into(a.data(), b.data(), 2);
    CHECK(a[0] == 0b0100);
    CHECK(a[1] == 0);
    std::vector<word_t> zero(5, 0);
    CHECK_FALSE(k.any(zero.data(), 5));
}

TEST_CASE("every vector variant matches the scalar reference") {
    const auto &ref = scalar_kernels();
    SplitMix64 rng(2024);
    for (const auto &v : vector_variants()) {
        CAPTURE(isa_name(v.isa));
        // Lengths around the 4-word AVX2 and 2-word NEON block sizes, plus odd
        // offsets so that loads are unaligned.
        for (std::size_t n = 0; n <= 37; n++) {
            for (std::size_t offset : {0, 1, 3}) {
                auto a_buf = random_words(n + offset, rng);
                auto b_buf = random_words(n + offset, rng);
                const word_t *a = a_buf.data() + offset;
                const word_t *b = b_buf.data() + offset;
                CHECK(v.popcount(a, n) == ref.popcount(a, n));
                CHECK(v.and_popcount(a, b, n) == ref.and_popcount(a, b, n));
                CHECK(v.or_popcount(a, b, n) == ref.or_popcount(a, b, n));
                CHECK(v.dot_parity(a, b, n) == ref.dot_parity(a, b, n));
                CHECK(v.any(a, n) == ref.any(a, n));

                auto x1 = a_buf, x2 = a_buf;
                ref.xor_into(x1.data() + offset, b, n);
                v.xor_into(x2.data() + offset, b, n);
                CHECK(x1 == x2);
                auto y1 = a_buf, y2 = a_buf;
                ref.and_into(y1.data() + offset, b, n);
                v.and_into(y2.data() + offset, b, n);
                CHECK(y1 == y2);

                // A single set bit in the last word must be seen by any().
                std::vector<word_t> sparse(n, 0);
                if (n > 0) {
                    sparse.back() = word_t{1} << 63;
                    CHECK(v.any(sparse.data(), n));
                }
            }
        }
    }
}

TEST_CASE("isa names round trip") {
    for (auto isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        CHECK(parse_isa(isa_name(isa)) == isa);
    }
    CHECK_FALSE(parse_isa("sse9").has_value());
    CHECK(kernels_for(Isa::scalar).has_value());
}

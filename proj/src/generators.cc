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

#include "qclean/generators.h"

#include <functional>
#include <string>

#include "qclean/errors.h"
#include "qclean/linalg.h"

namespace qclean {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw PreconditionError("SplitMix64::below(0)");
    // 2^64 mod bound, computed without 128-bit arithmetic.
    const std::uint64_t excess = (0 - bound) % bound;
    while (true) {
        const std::uint64_t x = next();
        if (excess == 0 || x < 0 - excess) return x % bound;
    }
}

BitVector SplitMix64::bits(std::size_t len) {
    BitVector v(len);
    auto words = v.words();
    for (auto &w : words) w = next();
    if (len % kWordBits != 0 && !words.empty()) {
        words.back() &= (word_t{1} << (len % kWordBits)) - 1;
    }
    return v;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, SplitMix64 &rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; r++) m.set_row(r, rng.bits(cols));
    return m;
}

Subspace random_span(std::size_t d, std::size_t gens, SplitMix64 &rng) {
    return Subspace::span(random_matrix(gens, d, rng));
}

CssCode example_42(std::size_t k) {
    if (k == 0) throw PreconditionError("example_42 needs k >= 1");
    BitMatrix hx(k, 2 * k);
    for (std::size_t i = 0; i < k; i++) {
        hx.set(i, i);
        hx.set(i, k + i);
    }
    return CssCode(std::move(hx), BitMatrix(0, 2 * k));
}

StabilizerCode repetition(std::size_t n) {
    if (n < 1) throw PreconditionError("repetition code needs n >= 1");
    BitMatrix gens(n - 1, 2 * n);
    for (std::size_t i = 0; i + 1 < n; i++) {
        gens.set(i, n + i);
        gens.set(i, n + i + 1);
    }
    return StabilizerCode::from_generators(n, gens);
}

CssCode toric(std::size_t L) {
    if (L < 2) throw PreconditionError("toric code needs L >= 2");
    const std::size_t n = 2 * L * L;
    auto h = [L](std::size_t r, std::size_t c) { return (r % L) * L + c % L; };
    auto v = [L](std::size_t r, std::size_t c) { return L * L + (r % L) * L + c % L; };
    BitMatrix hx(L * L, n), hz(L * L, n);
    for (std::size_t r = 0; r < L; r++) {
        for (std::size_t c = 0; c < L; c++) {
            const std::size_t row = r * L + c;
            for (auto e : {h(r, c), h(r, c + L - 1), v(r, c), v(r + L - 1, c)}) hx.set(row, e);
            for (auto e : {h(r, c), h(r + 1, c), v(r, c), v(r, c + 1)}) hz.set(row, e);
        }
    }
    return CssCode(std::move(hx), std::move(hz));
}

namespace {

constexpr int kDrawsPerRow = 64;

/// Draws rows from `draw` until `count` of them are independent.
BitMatrix independent_rows(std::size_t count, std::size_t cols, const std::function<BitVector()> &draw,
                           const char *what) {
    BitMatrix out(0, cols);
    Subspace spanned = Subspace::zero(cols);
    for (std::size_t i = 0; i < count; i++) {
        bool placed = false;
        for (int attempt = 0; attempt < kDrawsPerRow && !placed; attempt++) {
            auto v = draw();
            if (spanned.contains(v)) continue;
            out.append_row(v);
            spanned = Subspace::span(out);
            placed = true;
        }
        if (!placed) {
            throw Infeasible(std::string("could not draw ") + std::to_string(count) + " independent " + what +
                             " rows (stuck at row " + std::to_string(i + 1) + ")");
        }
    }
    return out;
}

BitVector combine_rows(const BitMatrix &basis, const BitVector &coeffs) {
    BitVector out(basis.cols());
    for (auto j : coeffs.support()) out ^= basis.row(j);
    return out;
}

}  // namespace

CssCode random_css(std::size_t n, std::size_t mx, std::size_t mz, std::uint64_t seed) {
    if (mx + mz > n) throw PreconditionError("random_css needs mx + mz <= n");
    SplitMix64 rng(seed);
    auto hx = independent_rows(mx, n, [&] { return rng.bits(n); }, "H_x");
    const auto ker = kernel_basis(hx);
    auto hz = independent_rows(mz, n, [&] { return combine_rows(ker, rng.bits(ker.rows())); }, "H_z");
    return CssCode(std::move(hx), std::move(hz));
}

StabilizerCode random_stabilizer(std::size_t n, std::size_t s_dim, std::uint64_t seed) {
    if (s_dim > n) throw PreconditionError("an isotropic subspace of F2^2n has dimension at most n");
    SplitMix64 rng(seed);
    const auto f = BilinearForm::symplectic(2 * n);
    Subspace s = Subspace::zero(2 * n);
    BitMatrix gens(0, 2 * n);
    for (std::size_t i = 0; i < s_dim; i++) {
        const auto perp = annihilator(s, f).basis();
        bool placed = false;
        for (int attempt = 0; attempt < kDrawsPerRow && !placed; attempt++) {
            auto v = combine_rows(perp, rng.bits(perp.rows()));
            if (s.contains(v)) continue;
            gens.append_row(v);
            s = Subspace::span(gens);
            placed = true;
        }
        if (!placed) throw Infeasible("could not extend the isotropic subspace past dimension " + std::to_string(i));
    }
    return StabilizerCode(n, std::move(s));
}

SubsystemCode random_subsystem(std::size_t n, std::size_t g_dim, std::uint64_t seed) {
    if (g_dim > 2 * n) throw PreconditionError("gauge dimension exceeds 2n");
    SplitMix64 rng(seed);
    auto gens = independent_rows(g_dim, 2 * n, [&] { return rng.bits(2 * n); }, "gauge");
    return SubsystemCode::from_generators(n, gens);
}

}  // namespace qclean

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

// Example codes and seeded random instances.
//
// Randomness comes from SplitMix64, fully specified below so that a given
// (parameters, seed) pair yields the same code on every platform.

#include <cstddef>
#include <cstdint>

#include "qclean/bitmatrix.h"
#include "qclean/codes.h"

namespace qclean {

/// SplitMix64 (Steele, Lea, Flood 2014). next(): state += 0x9e3779b97f4a7c15,
/// then the output mix z ^= z >> 30; z *= 0xbf58476d1ce4e5b9; z ^= z >> 27;
/// z *= 0x94d049bb133111eb; z ^= z >> 31.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection: draws x until
    /// x < 2^64 - (2^64 mod bound), then returns x mod bound.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform vector. Words are drawn in order, word i holding bits
    /// 64 i .. 64 i + 63; bits past len are cleared.
    BitVector bits(std::size_t len);

   private:
    std::uint64_t state_;
};

/// Uniform rows.
BitMatrix random_matrix(std::size_t rows, std::size_t cols, SplitMix64 &rng);

/// H_x = [I_k | I_k], H_z empty; n = 2k.
CssCode example_42(std::size_t k);

/// The n-qubit bit-flip repetition code, S = span{Z_i Z_{i+1}}.
StabilizerCode repetition(std::size_t n);

/// Toric code on an L x L torus, n = 2 L^2. Edge h(r, c) = r L + c joins
/// vertices (r, c) and (r, c + 1); edge v(r, c) = L^2 + r L + c joins (r, c)
/// and (r + 1, c), all mod L. Row r L + c of H_x is the star of vertex (r, c);
/// row r L + c of H_z is the plaquette with corners (r, c) and (r + 1, c + 1).
CssCode toric(std::size_t L);

/// H_x has mx independent uniform rows; H_z has mz independent rows drawn
/// uniformly from ker H_x. Each row gets 64 draws to be independent of the
/// previous ones before Infeasible is thrown.
CssCode random_css(std::size_t n, std::size_t mx, std::size_t mz, std::uint64_t seed);

/// Isotropic S built greedily: each generator is a uniform element of the
/// symplectic annihilator of the previous ones, redrawn while it lies in
/// their span.
StabilizerCode random_stabilizer(std::size_t n, std::size_t s_dim, std::uint64_t seed);

/// G spanned by g_dim independent uniform vectors of F2^2n.
SubsystemCode random_subsystem(std::size_t n, std::size_t g_dim, std::uint64_t seed);

/// Span of `gens` uniform vectors of F2^d. Not uniform over subspaces.
Subspace random_span(std::size_t d, std::size_t gens, SplitMix64 &rng);

}  // namespace qclean

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

// Length-two mod-2 chain complexes C2 -> C1 -> C0. For a CSS code,
// d1 = H_x and d2 = H_z^T, so H_1 counts logical qubits. Coboundaries are
// transposes and are never stored.

#include <cstddef>

#include "qclean/bitmatrix.h"
#include "qclean/codes.h"
#include "qclean/subspace.h"

namespace qclean {

class ChainComplex2 {
   public:
    /// d2: n1 x n2, d1: n0 x n1. Throws DimensionMismatch for inconsistent
    /// shapes and InvariantViolation unless d1 d2 = 0.
    ChainComplex2(BitMatrix d2, BitMatrix d1);

    const BitMatrix &d2() const { return d2_; }
    const BitMatrix &d1() const { return d1_; }
    std::size_t n0() const { return d1_.rows(); }
    std::size_t n1() const { return d1_.cols(); }
    std::size_t n2() const { return d2_.cols(); }

    /// Cycles Z1 = ker d1 and boundaries B1 = im d2, inside C1.
    const Subspace &cycles() const { return cycles_; }
    const Subspace &boundaries() const { return boundaries_; }
    /// Cocycles ker d2^T and coboundaries im d1^T, inside C^1 = C1.
    const Subspace &cocycles() const { return cocycles_; }
    const Subspace &coboundaries() const { return coboundaries_; }

   private:
    BitMatrix d2_, d1_;
    Subspace cycles_, boundaries_, cocycles_, coboundaries_;
};

ChainComplex2 from_css(const CssCode &c);

/// dim H_1, checked against dim H^1.
std::size_t betti1(const ChainComplex2 &cx);

enum class HomologySide { homology, cohomology };

/// Dimension of the classes with a representative inside alpha:
/// dim(alpha n ker d1) - dim(alpha n im d2) on the homology side,
/// dim(alpha n ker d2^T) - dim(alpha n im d1^T) on the cohomology side.
std::size_t restricted_class_dim(const ChainComplex2 &cx, const Subspace &alpha, HomologySide side);

/// [alpha] and [alpha^perp] are annihilators of each other under the pairing
/// of H_1 with H^1: their dimensions add up to betti1, and the cocycles pairing
/// to zero with every cycle in alpha are exactly alpha^perp n ker d2^T plus
/// coboundaries.
bool duality_check(const ChainComplex2 &cx, const Subspace &alpha);

}  // namespace qclean

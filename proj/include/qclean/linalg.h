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
#include <optional>
#include <vector>

#include "qclean/bitmatrix.h"

namespace qclean {

struct RowEchelon {
    /// Reduced row echelon form with zero rows removed.
    BitMatrix basis;
    /// Pivot column of each row of `basis`, strictly increasing.
    std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form. Pivots are chosen leftmost column first,
/// topmost available row, so the result depends only on the row space.
RowEchelon rref(const BitMatrix &m);

std::size_t rank(const BitMatrix &m);

/// Basis of {v : m v = 0}, itself in reduced row echelon form.
/// Has cols() - rank(m) rows.
BitMatrix kernel_basis(const BitMatrix &m);

/// The solution of m x = b with every free variable set to zero, or nullopt
/// when b is outside the column space of m.
std::optional<BitVector> solve(const BitMatrix &m, const BitVector &b);

struct IndexReport {
    std::size_t dim_ker_a = 0;
    std::size_t dim_ker_at = 0;
    std::int64_t index = 0;
};

/// For a: F2^m -> F2^n (n rows, m columns), computes dim ker A and dim ker A^T
/// by two independent eliminations and checks dim ker A - dim ker A^T = m - n.
IndexReport fredholm_index_check(const BitMatrix &a);

namespace detail {
/// Gauss-Jordan elimination in place, searching for pivots only among the
/// first `pivot_cols` columns. Returns the pivot columns; rows beyond their
/// count have zeros in those columns afterwards.
std::vector<std::size_t> reduce_in_place(BitMatrix &m, std::size_t pivot_cols);
}  // namespace detail

}  // namespace qclean

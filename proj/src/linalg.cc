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

#include "qclean/linalg.h"

#include "qclean/errors.h"

namespace qclean {

namespace detail {

std::vector<std::size_t> reduce_in_place(BitMatrix &m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < pivot_cols && next_row < m.rows(); c++) {
        std::size_t found = next_row;
        while (found < m.rows() && !m.get(found, c)) {
            found++;
        }
        if (found == m.rows()) continue;
        m.swap_rows(next_row, found);
        for (std::size_t r = 0; r < m.rows(); r++) {
            if (r != next_row && m.get(r, c)) {
                m.xor_row(r, next_row);
            }
        }
        pivots.push_back(c);
        next_row++;
    }
    return pivots;
}

}  // namespace detail

RowEchelon rref(const BitMatrix &m) {
    BitMatrix work = m;
    auto pivots = detail::reduce_in_place(work, work.cols());
    std::vector<std::size_t> keep(pivots.size());
    for (std::size_t i = 0; i < keep.size(); i++) keep[i] = i;
    return RowEchelon{work.select_rows(keep), std::move(pivots)};
}

std::size_t rank(const BitMatrix &m) {
    BitMatrix work = m;
    return detail::reduce_in_place(work, work.cols()).size();
}

BitMatrix kernel_basis(const BitMatrix &m) {
    auto [basis, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    BitMatrix kernel(m.cols() - pivots.size(), m.cols());
    std::size_t out = 0;
    for (std::size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) continue;
        kernel.set(out, f);
        for (std::size_t i = 0; i < pivots.size(); i++) {
            if (basis.get(i, f)) kernel.set(out, pivots[i]);
        }
        out++;
    }
    return rref(kernel).basis;
}

std::optional<BitVector> solve(const BitMatrix &m, const BitVector &b) {
    if (b.size() != m.rows()) {
        throw DimensionMismatch("solve: right-hand side of length " + std::to_string(b.size()) + " for " +
                                std::to_string(m.rows()) + " equations");
    }
    BitMatrix b_col(m.rows(), 1);
    for (std::size_t r = 0; r < m.rows(); r++) {
        if (b.get(r)) b_col.set(r, 0);
    }
    BitMatrix aug = BitMatrix::hstack(m, b_col);
    auto pivots = detail::reduce_in_place(aug, m.cols());
    for (std::size_t r = pivots.size(); r < aug.rows(); r++) {
        if (aug.get(r, m.cols())) return std::nullopt;
    }
    BitVector x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); i++) {
        if (aug.get(i, m.cols())) x.set(pivots[i]);
    }
    return x;
}

IndexReport fredholm_index_check(const BitMatrix &a) {
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    IndexReport report;
    report.dim_ker_a = kernel_basis(a).rows();
    report.dim_ker_at = kernel_basis(a.transposed()).rows();
    report.index = static_cast<std::int64_t>(report.dim_ker_a) - static_cast<std::int64_t>(report.dim_ker_at);
    QCLEAN_CHECK(report.index == static_cast<std::int64_t>(m) - static_cast<std::int64_t>(n),
                 "index identity dim ker A - dim ker A^T = m - n");
    return report;
}

}  // namespace qclean

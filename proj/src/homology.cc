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

#include "qclean/homology.h"

#include <string>

#include "qclean/errors.h"
#include "qclean/linalg.h"

namespace qclean {

ChainComplex2::ChainComplex2(BitMatrix d2, BitMatrix d1) : d2_(std::move(d2)), d1_(std::move(d1)) {
    if (d2_.rows() != d1_.cols()) {
        throw DimensionMismatch("d2 lands in a space of dimension " + std::to_string(d2_.rows()) +
                                " but d1 starts from dimension " + std::to_string(d1_.cols()));
    }
    if (!(d1_ * d2_).is_zero()) {
        throw InvariantViolation("d1 d2 != 0");
    }
    cycles_ = Subspace::span(kernel_basis(d1_));
    boundaries_ = Subspace::span(d2_.transposed());
    cocycles_ = Subspace::span(kernel_basis(d2_.transposed()));
    coboundaries_ = Subspace::span(d1_);
}

ChainComplex2 from_css(const CssCode &c) { return ChainComplex2(c.hz().transposed(), c.hx()); }

std::size_t betti1(const ChainComplex2 &cx) {
    const std::size_t homological = cx.cycles().dim() - cx.boundaries().dim();
    const std::size_t cohomological = cx.cocycles().dim() - cx.coboundaries().dim();
    QCLEAN_CHECK(homological == cohomological, "dim H_1 = dim H^1");
    return homological;
}

std::size_t restricted_class_dim(const ChainComplex2 &cx, const Subspace &alpha, HomologySide side) {
    if (alpha.ambient_dim() != cx.n1()) {
        throw DimensionMismatch("alpha lives in F2^" + std::to_string(alpha.ambient_dim()) + " but C1 has dimension " +
                                std::to_string(cx.n1()));
    }
    if (side == HomologySide::homology) {
        return restricted_quotient_dim(cx.cycles(), cx.boundaries(), alpha);
    }
    return restricted_quotient_dim(cx.cocycles(), cx.coboundaries(), alpha);
}

bool duality_check(const ChainComplex2 &cx, const Subspace &alpha) {
    const auto alpha_perp = annihilator(alpha, BilinearForm::euclidean(cx.n1()));
    const std::size_t a = restricted_class_dim(cx, alpha, HomologySide::homology);
    const std::size_t b = restricted_class_dim(cx, alpha_perp, HomologySide::cohomology);
    if (a + b != betti1(cx)) return false;
    // The cohomology classes annihilating [alpha] under the pairing of H_1 with
    // H^1, lifted to cocycles, must be exactly the classes with a
    // representative in alpha^perp.
    const auto f = BilinearForm::euclidean(cx.n1());
    const auto annihilating = intersect(cx.cocycles(), annihilator(intersect(cx.cycles(), alpha), f));
    const auto represented = sum(intersect(cx.cocycles(), alpha_perp), cx.coboundaries());
    if (!(annihilating == represented)) return false;
    return true;
}

}  // namespace qclean

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

#include "doctest.h"
#include "qclean/errors.h"
#include "qclean/generators.h"
#include "qclean/homology.h"
#include "qclean/linalg.h"

using namespace qclean;

TEST_CASE("complexes from css codes") {
    auto empty = from_css(CssCode(BitMatrix(0, 4), BitMatrix(0, 4)));
    CHECK(empty.n1() == 4);
    CHECK(empty.d1().is_zero());
    CHECK(empty.d2().is_zero());
    CHECK(betti1(empty) == 4);

    auto ex = from_css(example_42(1));
    CHECK(ex.n0() == 1);
    CHECK(ex.n1() == 2);
    CHECK(ex.n2() == 0);
    for (std::size_t k = 1; k <= 5; k++) CHECK(betti1(from_css(example_42(k))) == k);

    auto t2 = from_css(toric(2));
    CHECK(t2.n1() == 8);
    CHECK(betti1(t2) == 2);
    CHECK(betti1(from_css(toric(3))) == 2);

    CHECK_THROWS_AS(ChainComplex2(BitMatrix::from_strings({"1", "1"}), BitMatrix::from_strings({"10"})),
                    InvariantViolation);
    CHECK_THROWS_AS(ChainComplex2(BitMatrix(3, 1), BitMatrix(1, 2)), DimensionMismatch);
}

TEST_CASE("restricted class dimensions") {
    auto t2 = from_css(toric(2));
    for (auto side : {HomologySide::homology, HomologySide::cohomology}) {
        CHECK(restricted_class_dim(t2, Subspace::full(8), side) == 2);
        CHECK(restricted_class_dim(t2, Subspace::zero(8), side) == 0);
    }
    // Horizontal edges 0 and 1 of row 0 wrap around the torus.
    auto cycle = region_subspace(Region(8, {0, 1}), RegionLayout::plain_n);
    CHECK(restricted_class_dim(t2, cycle, HomologySide::homology) == 1);
    CHECK_THROWS_AS(restricted_class_dim(t2, Subspace::zero(7), HomologySide::homology), DimensionMismatch);
}

TEST_CASE("duality check") {
    auto t2 = from_css(toric(2));
    CHECK(duality_check(t2, Subspace::full(8)));
    CHECK(duality_check(t2, Subspace::zero(8)));
    auto ex = from_css(example_42(1));
    auto x_part = Subspace::span(BitMatrix::from_strings({"10"}));
    CHECK(duality_check(ex, x_part));
    CHECK(restricted_class_dim(ex, x_part, HomologySide::homology) +
              restricted_class_dim(ex, annihilator(x_part, BilinearForm::euclidean(2)), HomologySide::cohomology) ==
          1);

    SplitMix64 rng(12);
    for (int trial = 0; trial < 300; trial++) {
        const std::size_t n1 = 1 + rng.below(14);
        auto d1 = random_matrix(rng.below(n1 + 1), n1, rng);
        // Columns of d2 drawn from ker d1.
        auto ker = Subspace::span(kernel_basis(d1));
        auto picks = random_matrix(rng.below(n1 + 1), ker.dim(), rng);
        auto d2t = picks * ker.basis();
        ChainComplex2 cx(d2t.transposed(), d1);
        auto alpha = random_span(n1, rng.below(n1 + 1), rng);
        CHECK(duality_check(cx, alpha));
    }
}

TEST_CASE("class dimensions match css ells on regions") {
    for (std::uint64_t seed = 0; seed < 40; seed++) {
        SplitMix64 rng(seed);
        const std::size_t n = 2 + rng.below(10);
        const std::size_t mx = rng.below(n / 2 + 1);
        auto c = random_css(n, mx, rng.below(n - mx + 1), seed);
        auto cx = from_css(c);
        CHECK(betti1(cx) == c.k());
        for (int i = 0; i < 8; i++) {
            auto m = Region::from_mask(n, rng.below(std::uint64_t{1} << n));
            auto alpha = region_subspace(m, RegionLayout::plain_n);
            auto e = css_ells(c, m);
            CHECK(restricted_class_dim(cx, alpha, HomologySide::homology) == e.ell_z);
            CHECK(restricted_class_dim(cx, alpha, HomologySide::cohomology) == e.ell_x);
            CHECK(duality_check(cx, alpha));
        }
    }
}

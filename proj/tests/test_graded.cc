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

#include <vector>

#include "doctest.h"
#include "qclean/errors.h"
#include "qclean/generators.h"
#include "qclean/graded_lattice.h"

using namespace qclean;
using E = AbelianGroup::Element;

static_assert(GradedLattice<GrassmannianLattice>);
static_assert(GradedLattice<SubgroupLattice>);

namespace {

SubgroupLattice unit_lattice(const AbelianGroup &g) {
    std::vector<std::uint32_t> ones(g.num_factors(), 1);
    return SubgroupLattice(Bicharacter::product(g, ones));
}

}  // namespace

TEST_CASE("collapsed identity when xi = eta = alpha") {
    const auto lat = GrassmannianLattice(BilinearForm::symplectic(6));
    auto xi = random_stabilizer(3, 2, 4).stabilizer();
    auto t = graded_identity_terms(lat, xi, xi, xi);
    CHECK(t.a == 0);
    CHECK(t.b == t.c);
    CHECK(t.c == 6 - 2 * 2);
    CHECK(t.holds());
}

TEST_CASE("grassmannian identity matches the orthospace count") {
    for (auto f : {BilinearForm::euclidean(7), BilinearForm::symplectic(8)}) {
        const GrassmannianLattice lat(f);
        const std::size_t d = f.ambient_dim();
        SplitMix64 rng(d);
        for (int trial = 0; trial < 300; trial++) {
            auto xi = random_span(d, rng.below(4), rng);
            // Any eta inside xi^perp.
            auto xi_perp = annihilator(xi, f);
            auto eta = intersect(xi_perp, random_span(d, rng.below(d + 1), rng));
            auto alpha = random_span(d, rng.below(d + 1), rng);
            auto t = graded_identity_terms(lat, xi, eta, alpha);
            CHECK(t.holds());
            CHECK(verify_graded_identity(GradedLatticeInstance(lat), xi, eta, alpha));
            CHECK(t.c == std::int64_t(d) - std::int64_t(xi.dim()) - std::int64_t(eta.dim()));
            CHECK(verify_orthospace_identity(xi, eta, alpha, f) == t.holds());
            CHECK(lat.grade(alpha) + lat.grade(lat.dagger(alpha)) == std::int64_t(d));
            CHECK(verify_grading_law(lat, xi, alpha));
            CHECK(verify_common_product(lat, xi, alpha));
            CHECK(verify_quasi_complementation(lat, eta, alpha));
        }
    }
}

TEST_CASE("subgroup lattice on Z/4") {
    AbelianGroup z4({4});
    auto lat = unit_lattice(z4);
    auto h = generated_subgroup(z4, std::vector<E>{2});
    auto subs = all_subgroups(z4);
    REQUIRE(subs.size() == 3);
    for (const auto &alpha : subs) {
        CHECK(verify_graded_identity(lat, h, h, alpha));
        auto t = graded_identity_terms(lat, h, h, alpha);
        CHECK(t.c == Rational(1));
    }
}

TEST_CASE("subgroup lattice identity does not need xi orthogonal to eta") {
    AbelianGroup g({2, 4});
    auto lat = unit_lattice(g);
    auto subs = all_subgroups(g);
    for (const auto &xi : subs) {
        for (const auto &eta : subs) {
            if (!lat.leq(xi, lat.dagger(eta))) continue;
            for (const auto &alpha : subs) CHECK(verify_graded_identity(lat, xi, eta, alpha));
        }
    }
}

TEST_CASE("subgroup lattice laws") {
    AbelianGroup g({2, 6});
    auto lat = unit_lattice(g);
    auto subs = all_subgroups(g);
    for (const auto &a : subs) {
        CHECK(lat.grade(a) * lat.grade(lat.dagger(a)) == Rational(g.order()));
        for (const auto &b : subs) {
            CHECK(verify_grading_law(lat, a, b));
            CHECK(verify_common_product(lat, a, b));
            CHECK(verify_quasi_complementation(lat, a, b));
        }
    }
}

TEST_CASE("membership checks") {
    AbelianGroup z4({4});
    AbelianGroup z2({2});
    auto lat = unit_lattice(z4);
    CHECK_THROWS_AS(graded_identity_terms(lat, Subgroup::trivial(z2), Subgroup::trivial(z4), Subgroup::trivial(z4)),
                    DimensionMismatch);
    const GrassmannianLattice glat(BilinearForm::euclidean(3));
    CHECK_THROWS_AS(glat.check_member(Subspace::zero(4)), DimensionMismatch);
    GradedLatticeInstance inst = glat;
    CHECK(kind(inst) == LatticeKind::grassmannian);
    CHECK(kind(GradedLatticeInstance(lat)) == LatticeKind::subgroup_lattice);
    CHECK_THROWS_AS(verify_graded_identity(inst, Subgroup::trivial(z4), Subspace::zero(3), Subspace::zero(3)),
                    DimensionMismatch);
}

TEST_CASE("rational grades") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(3, 2) * Rational(2, 3) == Rational(1));
    CHECK((Rational(5) / Rational(10)).to_string() == "1/2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

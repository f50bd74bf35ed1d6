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

#include <set>
#include <vector>

#include "doctest.h"
#include "qclean/abelian.h"
#include "qclean/errors.h"
#include "qclean/oracle.h"

using namespace qclean;
using E = AbelianGroup::Element;

namespace {

Bicharacter unit_product(const AbelianGroup &g) {
    std::vector<std::uint32_t> ones(g.num_factors(), 1);
    return Bicharacter::product(g, ones);
}

E el(const AbelianGroup &g, std::vector<std::uint32_t> coords) { return g.encode(coords); }

/// Subgroup count by testing every subset for closure. Only for |G| <= 12.
std::size_t brute_subgroup_count(const AbelianGroup &g) {
    std::size_t count = 0;
    const E n = g.order();
    for (std::uint32_t mask = 0; mask < (1u << n); mask++) {
        if (!(mask & 1)) continue;
        bool closed = true;
        for (E a = 0; a < n && closed; a++) {
            if (!((mask >> a) & 1)) continue;
            for (E b = 0; b < n && closed; b++) {
                if ((mask >> b) & 1) closed = (mask >> g.add(a, b)) & 1;
            }
        }
        count += closed;
    }
    return count;
}

/// Subgroups generated by at most two elements, deduplicated. Covers every
/// subgroup of a group with at most two cyclic factors.
std::set<std::vector<E>> two_generated(const AbelianGroup &g) {
    std::set<std::vector<E>> out;
    for (E a = 0; a < g.order(); a++) {
        for (E b = a; b < g.order(); b++) {
            std::vector<E> gens{a, b};
            out.insert(generated_subgroup(g, gens).elements());
        }
    }
    return out;
}

}  // namespace

TEST_CASE("group encoding") {
    AbelianGroup g({2, 6});
    CHECK(g.order() == 12);
    CHECK(g.exponent() == 6);
    for (E e = 0; e < g.order(); e++) {
        CHECK(g.encode(g.decode(e)) == e);
        CHECK(g.add(e, g.neg(e)) == 0);
    }
    CHECK(g.decode(g.add(el(g, {1, 5}), el(g, {1, 3}))) == std::vector<std::uint32_t>{0, 2});
    CHECK_THROWS_AS(AbelianGroup({1, 3}), PreconditionError);
    CHECK_THROWS_AS(AbelianGroup({256, 257}), PreconditionError);
    CHECK_THROWS_AS(g.encode(std::vector<std::uint32_t>{1}), DimensionMismatch);
}

TEST_CASE("generated subgroups") {
    AbelianGroup z4({4});
    CHECK(generated_subgroup(z4, std::vector<E>{}) == Subgroup::trivial(z4));
    CHECK(generated_subgroup(z4, std::vector<E>{1}) == Subgroup::whole(z4));
    CHECK(generated_subgroup(z4, std::vector<E>{2}).elements() == std::vector<E>{0, 2});
    CHECK_THROWS_AS(Subgroup::from_elements(z4, std::vector<E>{0, 1}), InvariantViolation);
    CHECK_THROWS_AS(Subgroup::from_elements(z4, std::vector<E>{2}), InvariantViolation);
    CHECK(Subgroup::from_elements(z4, std::vector<E>{0, 2}).size() == 2);
}

TEST_CASE("meet and join") {
    AbelianGroup v4({2, 2});
    auto a = support_subgroup(v4, std::vector<std::size_t>{0});
    auto b = support_subgroup(v4, std::vector<std::size_t>{1});
    CHECK(subgroup_meet(a, b) == Subgroup::trivial(v4));
    CHECK(subgroup_join(a, b) == Subgroup::whole(v4));
    CHECK(subgroup_meet(a, Subgroup::trivial(v4)) == Subgroup::trivial(v4));
    CHECK(subgroup_join(a, Subgroup::whole(v4)) == Subgroup::whole(v4));

    AbelianGroup z6({6});
    auto h3 = generated_subgroup(z6, std::vector<E>{3});
    auto h2 = generated_subgroup(z6, std::vector<E>{2});
    CHECK(subgroup_join(h3, h2) == Subgroup::whole(z6));
    CHECK(subgroup_meet(h3, h2) == Subgroup::trivial(z6));
    CHECK_THROWS_AS(subgroup_meet(a, h3), DimensionMismatch);
}

TEST_CASE("subgroup enumeration matches brute force") {
    for (auto moduli : std::vector<std::vector<std::uint32_t>>{
             {2}, {4}, {6}, {8}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {2, 6}, {12}}) {
        AbelianGroup g(moduli);
        auto subs = all_subgroups(g);
        CHECK(subs.size() == brute_subgroup_count(g));
        for (const auto &h : subs) CHECK(g.order() % h.size() == 0);
    }
    CHECK(all_subgroups(AbelianGroup({4})).size() == 3);
    CHECK(all_subgroups(AbelianGroup({2, 2})).size() == 5);
    for (auto moduli : std::vector<std::vector<std::uint32_t>>{{4, 4}, {3, 9}, {2, 8}, {5, 5}}) {
        AbelianGroup g(moduli);
        auto subs = all_subgroups(g);
        std::set<std::vector<E>> listed;
        for (const auto &h : subs) listed.insert(h.elements());
        CHECK(listed == two_generated(g));
    }
    CHECK_THROWS_AS(all_subgroups(AbelianGroup({512})), BudgetExceeded);
    CHECK(all_subgroups(AbelianGroup({512}), 512).size() == 10);
}

TEST_CASE("dagger examples") {
    AbelianGroup z4({4});
    auto chi = unit_product(z4);
    CHECK(dagger(Subgroup::trivial(z4), chi) == Subgroup::whole(z4));
    auto h = generated_subgroup(z4, std::vector<E>{2});
    CHECK(dagger(h, chi) == h);

    AbelianGroup v4({2, 2});
    auto chi2 = unit_product(v4);
    auto first = support_subgroup(v4, std::vector<std::size_t>{0});
    // (a,b) pairs trivially with (1,0) iff a = 0: the dagger is the second factor.
    CHECK(dagger(first, chi2) == support_subgroup(v4, std::vector<std::size_t>{1}));
    CHECK(dagger(first, chi2) == oracle::subgroup_dagger_brute(first, chi2));
}

TEST_CASE("dagger is an order-reversing involution with constant product") {
    for (auto moduli : std::vector<std::vector<std::uint32_t>>{{4}, {2, 2}, {2, 6}, {4, 4}, {3, 3}, {2, 2, 2}}) {
        AbelianGroup g(moduli);
        auto chi = unit_product(g);
        auto subs = all_subgroups(g);
        for (const auto &a : subs) {
            auto ad = dagger(a, chi);
            CHECK(ad == oracle::subgroup_dagger_brute(a, chi));
            CHECK(dagger(ad, chi) == a);
            CHECK(a.size() * ad.size() == g.order());
            for (const auto &b : subs) {
                auto bd = dagger(b, chi);
                if (b.contains(a)) CHECK(ad.contains(bd));
                CHECK(dagger(subgroup_join(a, b), chi) == subgroup_meet(ad, bd));
                CHECK(subgroup_join(a, b).size() * subgroup_meet(a, b).size() == a.size() * b.size());
            }
        }
    }
}

TEST_CASE("bicharacter validation") {
    AbelianGroup z4({4});
    CHECK_THROWS_AS(Bicharacter::product(z4, std::vector<std::uint32_t>{2}), InvariantViolation);
    CHECK_THROWS_AS(Bicharacter::product(z4, std::vector<std::uint32_t>{1, 1}), DimensionMismatch);
    AbelianGroup z3sq({3, 3});
    auto chi = Bicharacter::product(z3sq, std::vector<std::uint32_t>{1, 2});
    CHECK(chi.value(el(z3sq, {1, 1}), el(z3sq, {1, 1})) == 0);
    CHECK(chi.value(el(z3sq, {1, 0}), el(z3sq, {1, 0})) == 1);

    // Antisymmetric pairing <a,b> = a1 b2 - a2 b1 on Z/n x Z/n.
    AbelianGroup zz({5, 5});
    auto sym = Bicharacter::from_matrix(zz, {{0, 1}, {-1, 0}});
    for (E a = 0; a < zz.order(); a++) CHECK(sym.is_trivial(a, a));
    for (const auto &h : all_subgroups(zz)) {
        CHECK(dagger(dagger(h, sym), sym) == h);
        CHECK(dagger(h, sym) == oracle::subgroup_dagger_brute(h, sym));
    }
    // Degenerate: the second factor pairs trivially with everything.
    CHECK_THROWS_AS(Bicharacter::from_matrix(zz, {{1, 0}, {0, 0}}), InvariantViolation);
    // Not well defined on Z/2 x Z/4: an entry of 1 ignores 2 * generator = 0 in Z/2.
    CHECK_THROWS_AS(Bicharacter::from_matrix(AbelianGroup({2, 4}), {{0, 1}, {1, 0}}), InvariantViolation);
    // Nondegenerate but not involutive.
    CHECK_THROWS_AS(Bicharacter::from_matrix(AbelianGroup({3, 3}), {{1, 1}, {0, 1}}), InvariantViolation);
}

TEST_CASE("abelian cleaning lemma examples") {
    AbelianGroup v4({2, 2});
    auto chi = unit_product(v4);
    auto trivial = Subgroup::trivial(v4);
    std::vector<std::size_t> m{0};
    auto r = abelian_cl(chi, trivial, m);
    CHECK(r.ell_m == Rational(2));
    CHECK(r.ell_mc == Rational(2));
    CHECK(r.quotient == Rational(4));
    auto alt = abelian_cl_alternative(chi, trivial, m);
    CHECK(alt.outcome == CleaningOutcome::nontrivial_supported);
    REQUIRE(alt.supported_witness);
    CHECK(*alt.supported_witness == el(v4, {1, 0}));

    AbelianGroup z3sq({3, 3});
    auto r3 = abelian_cl(unit_product(z3sq), Subgroup::trivial(z3sq), m);
    CHECK(r3.ell_m * r3.ell_mc == Rational(9));

    // Self-dual H: every M gives 1, and the identity is the only witness.
    AbelianGroup z4({4});
    auto self_dual = generated_subgroup(z4, std::vector<E>{2});
    for (auto factors : {std::vector<std::size_t>{}, std::vector<std::size_t>{0}}) {
        auto rs = abelian_cl(unit_product(z4), self_dual, factors);
        CHECK(rs.ell_m == Rational(1));
        CHECK(rs.ell_mc == Rational(1));
        auto a = abelian_cl_alternative(unit_product(z4), self_dual, factors);
        CHECK(a.outcome == CleaningOutcome::all_cleanable);
        CHECK(a.coset_witnesses == std::vector<E>{0});
    }

    // Z/4 x Z/4 with H = <(2,2)> and M = {1}.
    AbelianGroup g44({4, 4});
    auto chi44 = unit_product(g44);
    auto h = generated_subgroup(g44, std::vector<E>{el(g44, {2, 2})});
    auto r44 = abelian_cl(chi44, h, m);
    auto hd = dagger(h, chi44);
    CHECK(r44.quotient == Rational(hd.size(), h.size()));
    CHECK(r44.ell_m * r44.ell_mc == r44.quotient);
    auto a44 = abelian_cl_alternative(chi44, h, m);
    // Cross-check by scanning every element of H^dagger supported on the first factor.
    bool supported = false;
    for (E e : hd.elements()) supported = supported || (g44.component(e, 1) == 0 && !h.contains(e));
    CHECK(supported == (a44.outcome == CleaningOutcome::nontrivial_supported));
    CHECK(supported == !(r44.ell_m == Rational(1)));
    CHECK(*a44.supported_witness == el(g44, {2, 0}));

    // Preconditions.
    CHECK_THROWS_AS(abelian_cl(chi, Subgroup::whole(v4), m), PreconditionError);
    CHECK_THROWS_AS(abelian_cl(chi, trivial, std::vector<std::size_t>{2}), PreconditionError);
    AbelianGroup zz({3, 3});
    auto anti = Bicharacter::from_matrix(zz, {{0, 1}, {-1, 0}});
    CHECK_THROWS_AS(abelian_cl(anti, Subgroup::trivial(zz), m), PreconditionError);
}

TEST_CASE("all-cleanable witnesses lie in the complement and cover every coset") {
    AbelianGroup g({2, 6});
    auto chi = unit_product(g);
    for (const auto &h : all_subgroups(g)) {
        auto hd = dagger(h, chi);
        if (!hd.contains(h)) continue;
        for (auto factors : {std::vector<std::size_t>{}, std::vector<std::size_t>{0}, std::vector<std::size_t>{1},
                             std::vector<std::size_t>{0, 1}}) {
            auto alt = abelian_cl_alternative(chi, h, factors);
            if (alt.outcome != CleaningOutcome::all_cleanable) continue;
            CHECK(alt.coset_witnesses.size() * h.size() == hd.size());
            std::set<std::vector<E>> cosets;
            for (E w : alt.coset_witnesses) {
                CHECK(hd.contains(w));
                for (auto j : factors) CHECK(g.component(w, j) == 0);
                std::vector<E> coset;
                for (E x : h.elements()) coset.push_back(g.add(w, x));
                std::sort(coset.begin(), coset.end());
                cosets.insert(coset);
            }
            CHECK(cosets.size() == alt.coset_witnesses.size());
        }
    }
}

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
#include "qclean/oracle.h"

using namespace qclean;

TEST_CASE("enum_subspace_dim examples") {
    CHECK(oracle::enum_subspace_dim(6, [](const BitVector &) { return true; }) == 6);
    CHECK(oracle::enum_subspace_dim(6, [](const BitVector &v) { return v.is_zero(); }) == 0);
    CHECK(oracle::enum_subspace_dim(0, [](const BitVector &) { return true; }) == 0);
    auto hx = example_42(2).hx();
    CHECK(oracle::enum_subspace_dim(4, [&](const BitVector &v) { return hx.apply(v).is_zero(); }) == 2);
    // Three vectors: not a power of two.
    CHECK_THROWS_AS(oracle::enum_subspace_dim(2, [](const BitVector &v) { return v.popcount() != 2; }),
                    InvariantViolation);
    // Four vectors but not closed under addition: 001 + 010 is missing.
    CHECK_THROWS_AS(oracle::enum_subspace_dim(3,
                                              [](const BitVector &v) {
                                                  const auto w = oracle::pack(v);
                                                  return w == 0 || w == 1 || w == 2 || w == 7;
                                              }),
                    InvariantViolation);
    CHECK_THROWS_AS(oracle::enum_subspace_dim(21, [](const BitVector &) { return true; }), BudgetExceeded);
}

TEST_CASE("span sets and commutation") {
    oracle::SpanSet s(BitMatrix::from_strings({"110", "011"}));
    CHECK(s.size() == 4);
    CHECK(s.contains(BitVector::from_string("101")));
    CHECK_FALSE(s.contains(BitVector::from_string("100")));
    auto gens = BitMatrix::from_strings({"000110", "000011"});
    CHECK(oracle::commutes_with_all(BitVector::from_string("111000"), gens));
    CHECK_FALSE(oracle::commutes_with_all(BitVector::from_string("100000"), gens));
    CHECK_THROWS_AS(oracle::pack(BitVector(65)), DimensionMismatch);
}

TEST_CASE("brute distance") {
    CHECK(oracle::brute_distance(repetition(3)) == 1);
    CHECK(oracle::brute_distance(css_to_stabilizer(toric(2))) == 2);
    CHECK(oracle::brute_distance(repetition(5)) == 1);
    CHECK_THROWS_AS(oracle::brute_distance(css_to_stabilizer(toric(3))), BudgetExceeded);
}

TEST_CASE("brute dagger") {
    AbelianGroup z4({4});
    auto chi = Bicharacter::product(z4, std::vector<std::uint32_t>{1});
    CHECK(oracle::subgroup_dagger_brute(Subgroup::trivial(z4), chi) == Subgroup::whole(z4));
    auto h = generated_subgroup(z4, std::vector<AbelianGroup::Element>{2});
    CHECK(oracle::subgroup_dagger_brute(h, chi) == h);
    AbelianGroup big({4097});
    auto chib = Bicharacter::product(big, std::vector<std::uint32_t>{1});
    CHECK_THROWS_AS(oracle::subgroup_dagger_brute(Subgroup::trivial(big), chib), BudgetExceeded);
}

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

#include <array>
#include <vector>

#include "doctest.h"
#include "qclean/errors.h"
#include "qclean/generators.h"
#include "qclean/linalg.h"

using namespace qclean;

TEST_CASE("splitmix64 reference stream") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafull);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ull);
    CHECK(rng.next() == 0x06c45d188009454full);
}

TEST_CASE("bounded draws and bit vectors") {
    SplitMix64 rng(42);
    std::array<int, 6> hist{};
    for (int i = 0; i < 6000; i++) hist[rng.below(6)]++;
    for (int h : hist) {
        CHECK(h > 800);
        CHECK(h < 1200);
    }
    CHECK(rng.below(1) == 0);
    CHECK_THROWS_AS(rng.below(0), PreconditionError);

    // bits() consumes one word per 64 bits, low bits first, and clears padding.
    SplitMix64 a(9), b(9);
    auto v = a.bits(70);
    CHECK(v.words()[0] == b.next());
    CHECK(v.words()[1] == (b.next() & 0x3f));
}

TEST_CASE("example_42") {
    auto c1 = example_42(1);
    CHECK(c1.hx() == BitMatrix::from_strings({"11"}));
    CHECK(c1.hz().rows() == 0);
    auto c2 = example_42(2);
    CHECK(c2.n() == 4);
    CHECK(rank(c2.hx()) == 2);
    CHECK(c2.k() == 2);
    CHECK_THROWS_AS(example_42(0), PreconditionError);
}

TEST_CASE("repetition and toric codes") {
    auto rep = repetition(3);
    CHECK(rep.n() == 3);
    CHECK(rep.k() == 1);
    auto t2 = toric(2);
    CHECK(t2.n() == 8);
    CHECK(t2.k() == 2);
    auto t3 = toric(3);
    CHECK(t3.n() == 18);
    CHECK(t3.k() == 2);
    // Vertex (0,0) touches horizontal edges (0,0), (0,L-1) and vertical edges (0,0), (L-1,0).
    std::vector<std::size_t> expected{0, 2, 9, 15};
    CHECK(t3.hx().row(0).support() == expected);
    for (std::size_t r = 0; r < t3.hx().rows(); r++) CHECK(t3.hx().row(r).popcount() == 4);
    CHECK_THROWS_AS(toric(1), PreconditionError);
}

TEST_CASE("random css codes") {
    auto none = random_css(6, 0, 0, 1);
    CHECK(none.k() == 6);
    auto c = random_css(8, 3, 3, 5);
    CHECK((c.hx() * c.hz().transposed()).is_zero());
    CHECK(c.hx().rows() == 3);
    CHECK(c.hz().rows() == 3);
    CHECK(random_css(8, 3, 3, 5).hx() == c.hx());
    CHECK(random_css(8, 3, 3, 5).hz() == c.hz());
    for (std::uint64_t seed = 0; seed < 100; seed++) {
        auto r = random_css(10, 1 + seed % 4, seed % 5, seed);
        CHECK(r.k() == r.n() - rank(r.hx()) - rank(r.hz()));
    }
    CHECK_THROWS_AS(random_css(4, 3, 2, 0), PreconditionError);
}

TEST_CASE("random stabilizer and subsystem codes") {
    CHECK(random_stabilizer(5, 0, 1).k() == 5);
    CHECK(random_stabilizer(5, 5, 1).k() == 0);
    auto s = random_stabilizer(6, 3, 77);
    CHECK(is_isotropic(s.stabilizer(), s.form()));
    CHECK(s.k() == 3);
    CHECK(random_stabilizer(6, 3, 77).stabilizer() == s.stabilizer());
    CHECK_THROWS_AS(random_stabilizer(3, 4, 0), PreconditionError);

    auto g = random_subsystem(5, 6, 3);
    CHECK(g.gauge().dim() == 6);
    CHECK(g.gauge().dim() == g.n() - g.k() + g.g());
    CHECK(g.stabilizer().dim() == g.n() - g.k() - g.g());
    CHECK(random_subsystem(5, 6, 3).gauge() == g.gauge());
    CHECK_THROWS_AS(random_subsystem(2, 5, 0), PreconditionError);
}

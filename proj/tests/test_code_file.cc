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

#include <string>

#include "doctest.h"
#include "qclean/code_file.h"
#include "qclean/errors.h"
#include "qclean/generators.h"

using namespace qclean;

namespace {

std::string fixture(const char *name) { return std::string(QCLEAN_FIXTURE_DIR) + "/" + name; }

void check_parse_error(const std::string &text, std::size_t line, std::size_t column) {
    try {
        parse_code_file(text);
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == line);
        CHECK(e.column() == column);
    }
}

}  // namespace

TEST_CASE("fixtures load with the declared parameters") {
    auto empty = std::get<CssCode>(load_code_file(fixture("empty.css")));
    CHECK(empty.n() == 4);
    CHECK(empty.k() == 4);
    auto ex2 = std::get<CssCode>(load_code_file(fixture("example42_k2.css")));
    CHECK(ex2.k() == 2);
    CHECK(ex2.hx() == example_42(2).hx());
    auto t2 = std::get<CssCode>(load_code_file(fixture("toric2.css")));
    CHECK(t2.hx() == toric(2).hx());
    CHECK(t2.hz() == toric(2).hz());
    auto t3 = std::get<CssCode>(load_code_file(fixture("toric3.css")));
    CHECK(t3.hx() == toric(3).hx());
    CHECK(t3.hz() == toric(3).hz());
    auto rep = std::get<StabilizerCode>(load_code_file(fixture("repetition3.stab")));
    CHECK(rep.generators() == repetition(3).generators());
    auto gauge = std::get<SubsystemCode>(load_code_file(fixture("gauge_x1z1.gauge")));
    CHECK(gauge.k() == 1);
    CHECK(gauge.g() == 1);
    CHECK_THROWS_WITH_AS(load_code_file(fixture("bad_commutation.css")), "H_x H_z^T != 0 at row pair (1,1)",
                         InvariantViolation);
    CHECK_THROWS_AS(load_code_file(fixture("does_not_exist.css")), ParseError);
}

TEST_CASE("parse errors carry line and column") {
    check_parse_error("", 1, 1);
    check_parse_error("  QQ n=3\n", 1, 3);
    check_parse_error("CSS\n", 1, 4);
    check_parse_error("CSS m=3\n", 1, 5);
    check_parse_error("CSS n=x\n", 1, 7);
    check_parse_error("CSS n=3z\n", 1, 8);
    check_parse_error("CSS n=3\n110\n", 2, 1);
    check_parse_error("CSS n=3\nHX:\n\n  1a0\n", 4, 4);
    check_parse_error("CSS n=3\nHX:\n11\nHZ:\n", 3, 1);
    check_parse_error("CSS n=3\nHX:\nHX:\nHZ:\n", 3, 1);
    check_parse_error("CSS n=3\nHX:\n# only x\n", 2, 1);
    check_parse_error("STAB n=2\n0001 # fine\n001\n", 3, 1);
}

TEST_CASE("comments and blank lines are ignored") {
    auto code = parse_code_file("# header comment\n\nSTAB n=2  # two qubits\n  0011\n\n");
    CHECK(std::get<StabilizerCode>(code).k() == 1);
}

TEST_CASE("invariants are checked after parsing") {
    CHECK_THROWS_AS(parse_code_file("STAB n=1\n10\n01\n"), InvariantViolation);
    CHECK_THROWS_AS(parse_code_file("CSS n=2\nHX:\n10\nHZ:\n11\n"), InvariantViolation);
}

TEST_CASE("serialization round trips") {
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        auto css = random_css(7, seed % 3, seed % 4, seed);
        auto back = std::get<CssCode>(parse_code_file(serialize(css)));
        CHECK(back.hx() == css.hx());
        CHECK(back.hz() == css.hz());

        auto stab = random_stabilizer(5, seed % 6, seed);
        auto sback = std::get<StabilizerCode>(parse_code_file(serialize(AnyCode(stab))));
        CHECK(sback.generators() == stab.generators());
        CHECK(sback.stabilizer() == stab.stabilizer());

        auto sub = random_subsystem(4, seed % 9, seed);
        auto gback = std::get<SubsystemCode>(parse_code_file(serialize(sub)));
        CHECK(gback.generators() == sub.generators());
        CHECK(gback.gauge() == sub.gauge());
    }
    auto rep = serialize(repetition(3));
    CHECK(rep == "STAB n=3\n000110\n000011\n");
}

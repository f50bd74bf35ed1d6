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

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qclean/cli.h"
#include "qclean/code_file.h"

using nlohmann::json;

namespace {

std::string fixture(const char *name) { return std::string(QCLEAN_FIXTURE_DIR) + "/" + name; }

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = qclean::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = 0) {
    args.insert(args.begin(), "--json");
    auto r = run(args);
    CHECK(r.code == expected_code);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("info") {
    auto j = run_json({"info", fixture("toric2.css")});
    CHECK(j["code"]["n"] == 8);
    CHECK(j["code"]["k"] == 2);
    auto plain = run({"info", fixture("toric2.css")});
    CHECK(plain.code == 0);
    CHECK(plain.out.find("code.k: 2\n") != std::string::npos);
    auto g = run_json({"info", fixture("gauge_x1z1.gauge")});
    CHECK(g["code"]["type"] == "subsystem");
    CHECK(g["code"]["g"] == 1);
}

TEST_CASE("region") {
    auto j = run_json({"region", fixture("repetition3.stab"), "--qubits", "1"});
    CHECK(j["ell_m"] == 1);
    CHECK(j["ell_mc"] == 1);
    CHECK(j["correctable"] == false);
    CHECK(j["identity_holds"] == true);
    auto ex = run_json({"region", fixture("example42_k2.css"), "--qubits", "1-2"});
    CHECK(ex["css"]["ell_x"] == 2);
    CHECK(ex["css"]["ell_z_prime"] == 0);
    auto gauge = run_json({"region", fixture("gauge_x1z1.gauge"), "--qubits", "2"});
    CHECK(gauge["g_dressed_m"] == 2);
    CHECK(gauge["g_bare_mc"] == 0);
    auto multi = run_json({"region", fixture("toric2.css"), "--qubits", "1,3-5"});
    CHECK(multi["qubits"] == json::array({1, 3, 4, 5}));
    CHECK(multi["identity_holds"] == true);
}

TEST_CASE("clean") {
    auto j = run_json({"clean", fixture("repetition3.stab"), "--qubits", "1", "--op", "000100"});
    CHECK(j["feasible"] == true);
    CHECK(j["cleaned"] == "000010");
    auto bad = run_json({"clean", fixture("repetition3.stab"), "--qubits", "1-3", "--op", "000100"}, 4);
    CHECK(bad["feasible"] == false);
    CHECK(bad["cleaned"].is_null());
    auto outside = run_json({"clean", fixture("repetition3.stab"), "--qubits", "1", "--op", "100000"}, 3);
    CHECK(outside["error"]["kind"] == "invariant");
    CHECK(run({"clean", fixture("repetition3.stab"), "--qubits", "1", "--op", "10"}).code == 1);
}

TEST_CASE("distance") {
    CHECK(run_json({"distance", fixture("repetition3.stab")})["distance"] == 1);
    CHECK(run_json({"distance", fixture("toric2.css")})["distance"] == 2);
    auto t3 = run_json({"distance", fixture("toric3.css"), "--method", "certify"});
    CHECK(t3["distance"] == 3);
    CHECK(t3["certified_lower_bound"] == 2);
    auto capped = run_json({"distance", fixture("toric3.css"), "--max-weight", "2"});
    CHECK(capped["distance"].is_null());
    auto budget = run_json({"--budget", "10", "distance", fixture("toric3.css")}, 5);
    CHECK(budget["error"]["kind"] == "budget");
}

TEST_CASE("tripartition") {
    auto ok = run_json({"tripartition", fixture("toric2.css"), "--A", "1", "--B", "2", "--C", "3-8"});
    CHECK(ok["status"] == "verified");
    CHECK(ok["two_k"] == 4);
    CHECK(ok["two_c"] == 12);
    auto bad = run_json({"tripartition", fixture("repetition3.stab"), "--A", "1", "--B", "", "--C", "2,3"}, 4);
    CHECK(bad["status"] == "hypothesis-failed");
    CHECK(bad["failed_hypothesis"] == "A correctable");
    CHECK(run({"tripartition", fixture("repetition3.stab"), "--A", "1", "--B", "1", "--C", "2,3"}).code == 3);
}

TEST_CASE("homology and universal") {
    auto h = run_json({"homology", fixture("toric2.css"), "--alpha-qubits", "1,2"});
    CHECK(h["betti1"] == 2);
    CHECK(h["alpha"]["homology_dim"] == 1);
    CHECK(h["alpha"]["duality_holds"] == true);
    auto u = run_json({"universal", fixture("toric2.css")});
    CHECK(u["ell_x"].get<int>() + u["ell_z"].get<int>() == 2);
    CHECK(run({"homology", fixture("repetition3.stab")}).code == 1);
}

TEST_CASE("verify") {
    auto j = run_json({"verify", "--suite", "cl", "--trials", "20", "--seed", "7"});
    CHECK(j["passed"] == true);
    CHECK(j["suites"][0]["failures"] == 0);
    auto all = run({"verify", "--trials", "5", "--seed", "3", "--oracle"});
    CHECK(all.code == 0);
}

TEST_CASE("gen writes parseable files") {
    auto plain = run({"gen", "toric", "2"});
    CHECK(plain.code == 0);
    auto code = std::get<qclean::CssCode>(qclean::parse_code_file(plain.out));
    CHECK(code.k() == 2);
    const auto path = (std::filesystem::temp_directory_path() / "qclean_cli_gen_test.stab").string();
    auto j = run_json({"gen", "random-stab", "6", "3", "11", "-o", path});
    CHECK(j["output"] == path);
    auto info = run_json({"info", path});
    CHECK(info["code"]["k"] == 3);
    std::remove(path.c_str());
    CHECK(run({"gen", "toric"}).code == 1);
    CHECK(run({"gen", "nonsense", "1"}).code == 1);
}

TEST_CASE("abelian") {
    auto j = run_json({"abelian", "--moduli", "2,2", "--factors", "1"});
    CHECK(j["ell_m"] == "2");
    CHECK(j["ell_mc"] == "2");
    CHECK(j["quotient"] == "4");
    CHECK(j["outcome"] == "nontrivial-supported");
    CHECK(j["supported_witness"] == json::array({1, 0}));
    auto h = run_json({"abelian", "--moduli", "4,4", "--subgroup-gens", "2,2", "--factors", "1"});
    CHECK(h["supported_witness"] == json::array({2, 0}));
    auto self = run_json({"abelian", "--moduli", "4", "--subgroup-gens", "2", "--factors", "1"});
    CHECK(self["outcome"] == "all-cleanable");
    CHECK(self["coset_witnesses"] == json::array({json::array({0})}));
    auto bad = run_json({"abelian", "--moduli", "2,2", "--subgroup-gens", "1,0;0,1", "--factors", "1"}, 3);
    CHECK(bad["error"]["kind"] == "invariant");
}

TEST_CASE("error exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"region", fixture("toric2.css")}).code == 1);
    CHECK(run({"region", fixture("toric2.css"), "--qubits", "9"}).code == 1);
    CHECK(run({"region", fixture("toric2.css"), "--qubits", "x"}).code == 1);
    auto missing = run_json({"info", fixture("missing.css")}, 2);
    CHECK(missing["error"]["kind"] == "parse");
    auto bad = run({"info", fixture("bad_commutation.css")});
    CHECK(bad.code == 3);
    CHECK(bad.err.find("row pair (1,1)") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

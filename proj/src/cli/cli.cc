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

#include "qclean/cli.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qclean/abelian.h"
#include "qclean/code_file.h"
#include "qclean/codes.h"
#include "qclean/errors.h"
#include "qclean/generators.h"
#include "qclean/homology.h"
#include "qclean/linalg.h"
#include "verify_suites.h"

namespace qclean::cli {

namespace {

using nlohmann::json;

/// Bad command-line input detected after CLI11 parsing.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A report that still sets a nonzero exit code (e.g. an infeasible cleaning).
struct Outcome {
    json report;
    int exit_code = kOk;
};

struct Globals {
    bool json = false;
    unsigned threads = 1;
    std::uint64_t budget = 0;
};

std::uint64_t parse_uint(std::string_view text, const std::string &what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw UsageError("invalid " + what + " '" + std::string(text) + "'");
    }
    return value;
}

std::int64_t parse_int(std::string_view text, const std::string &what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw UsageError("invalid " + what + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    if (text.empty()) return parts;
    std::size_t start = 0;
    while (true) {
        auto end = text.find(sep, start);
        parts.emplace_back(text.substr(start, end - start));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return parts;
}

/// "1,3-5" -> {1, 3, 4, 5}.
std::vector<std::size_t> parse_qubit_list(const std::string &text) {
    std::vector<std::size_t> out;
    for (const auto &item : split(text, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) {
            out.push_back(parse_uint(item, "qubit"));
            continue;
        }
        const auto lo = parse_uint(std::string_view(item).substr(0, dash), "qubit range");
        const auto hi = parse_uint(std::string_view(item).substr(dash + 1), "qubit range");
        if (lo > hi) throw UsageError("empty qubit range '" + item + "'");
        for (auto q = lo; q <= hi; q++) out.push_back(q);
    }
    return out;
}

Region parse_region(const std::string &text, std::size_t n) {
    auto qubits = parse_qubit_list(text);
    for (auto q : qubits) {
        if (q == 0 || q > n) {
            throw UsageError("qubit " + std::to_string(q) + " is out of range 1.." + std::to_string(n));
        }
    }
    std::sort(qubits.begin(), qubits.end());
    if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
        throw UsageError("qubit list '" + text + "' repeats a qubit");
    }
    return Region::from_one_based(n, qubits);
}

json summary(const AnyCode &code) {
    return std::visit(
        [](const auto &c) -> json {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, CssCode>) {
                return {{"type", "css"},          {"n", c.n()},
                        {"k", c.k()},             {"hx_rows", c.hx().rows()},
                        {"hz_rows", c.hz().rows()}, {"rank_hx", c.xi().dim()},
                        {"rank_hz", c.eta().dim()}};
            } else if constexpr (std::is_same_v<T, StabilizerCode>) {
                return {{"type", "stabilizer"}, {"n", c.n()}, {"k", c.k()}, {"stabilizer_dim", c.stabilizer().dim()}};
            } else {
                return {{"type", "subsystem"},  {"n", c.n()},
                        {"k", c.k()},           {"g", c.g()},
                        {"gauge_dim", c.gauge().dim()}, {"stabilizer_dim", c.stabilizer().dim()}};
            }
        },
        code);
}

std::size_t code_n(const AnyCode &code) {
    return std::visit([](const auto &c) { return c.n(); }, code);
}

/// Stabilizer view of a stabilizer or CSS code; subsystem codes are rejected.
StabilizerCode as_stabilizer(const AnyCode &code, const char *command) {
    if (auto *css = std::get_if<CssCode>(&code)) return css_to_stabilizer(*css);
    if (auto *stab = std::get_if<StabilizerCode>(&code)) return *stab;
    throw UsageError(std::string(command) + " needs a CSS or stabilizer code, not a subsystem code");
}

const CssCode &as_css(const AnyCode &code, const char *command) {
    if (auto *css = std::get_if<CssCode>(&code)) return *css;
    throw UsageError(std::string(command) + " needs a CSS code");
}

json bit_rows(const BitMatrix &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); r++) rows.push_back(m.row(r).to_string());
    return rows;
}

// ------------------------------------------------------------- commands

Outcome cmd_info(const std::string &file) {
    const auto code = load_code_file(file);
    return {{{"command", "info"}, {"file", file}, {"code", summary(code)}}};
}

Outcome cmd_region(const std::string &file, const std::string &qubits) {
    const auto code = load_code_file(file);
    const auto m = parse_region(qubits, code_n(code));
    json j{{"command", "region"}, {"file", file}, {"qubits", m.one_based()}, {"complement", m.complement().one_based()}};
    if (auto *sub = std::get_if<SubsystemCode>(&code)) {
        const auto gs = subsystem_gs(*sub, m);
        j["k"] = sub->k();
        j["g"] = sub->g();
        j["two_k"] = 2 * sub->k();
        j["g_dressed_m"] = gs.g_dressed_m;
        j["g_bare_mc"] = gs.g_bare_mc;
        j["identity_holds"] = gs.g_dressed_m + gs.g_bare_mc == 2 * sub->k();
        return {j};
    }
    const auto stab = as_stabilizer(code, "region");
    const auto ell_m = stab_ell(stab, m);
    const auto ell_mc = stab_ell(stab, m.complement());
    j["k"] = stab.k();
    j["two_k"] = 2 * stab.k();
    j["ell_m"] = ell_m;
    j["ell_mc"] = ell_mc;
    j["identity_holds"] = ell_m + ell_mc == 2 * stab.k();
    j["correctable"] = ell_m == 0;
    if (auto *css = std::get_if<CssCode>(&code)) {
        const auto e = css_ells(*css, m);
        j["css"] = {{"ell_x", e.ell_x}, {"ell_z", e.ell_z}, {"ell_x_prime", e.ell_x_prime}, {"ell_z_prime", e.ell_z_prime}};
    }
    return {j};
}

Outcome cmd_clean(const std::string &file, const std::string &qubits, const std::string &op) {
    const auto code = load_code_file(file);
    const auto stab = as_stabilizer(code, "clean");
    const auto m = parse_region(qubits, stab.n());
    if (op.size() != 2 * stab.n() || op.find_first_not_of("01") != std::string::npos) {
        throw UsageError("--op needs " + std::to_string(2 * stab.n()) + " characters of 0/1 (x block then z block)");
    }
    const auto v = BitVector::from_string(op);
    const auto cleaned = clean(stab, m, v);
    json j{{"command", "clean"}, {"file", file}, {"qubits", m.one_based()}, {"op", op}, {"feasible", cleaned.has_value()}};
    j["cleaned"] = cleaned ? json(cleaned->to_string()) : json(nullptr);
    return {j, cleaned ? kOk : kInfeasible};
}

Outcome cmd_distance(const std::string &file, std::optional<std::size_t> max_weight, const std::string &method,
                     const Globals &g) {
    const auto code = load_code_file(file);
    const auto stab = as_stabilizer(code, "distance");
    const std::size_t w = max_weight.value_or(stab.n());
    json j{{"command", "distance"}, {"file", file}, {"method", method}, {"max_weight", w}, {"n", stab.n()}, {"k", stab.k()}};
    std::optional<std::size_t> d;
    if (method == "brute") {
        d = distance_brute(stab, w, g.budget);
    } else {
        std::size_t certified = 0;
        for (std::size_t t = 1; t <= std::min(w, stab.n()) && stab.k() > 0; t++) {
            if (!distance_certify_lb(stab, t, g.budget, g.threads)) {
                d = t;
                break;
            }
            certified = t;
        }
        j["certified_lower_bound"] = certified;
    }
    j["distance"] = d ? json(*d) : json(nullptr);
    return {j};
}

Outcome cmd_tripartition(const std::string &file, const std::string &a, const std::string &b, const std::string &c) {
    const auto code = load_code_file(file);
    const auto stab = as_stabilizer(code, "tripartition");
    const auto ra = parse_region(a, stab.n());
    const auto rb = parse_region(b, stab.n());
    const auto rc = parse_region(c, stab.n());
    const auto res = tripartition_bound(stab, ra, rb, rc);
    const bool ok = res.status == TripartitionStatus::verified;
    json j{{"command", "tripartition"}, {"file", file}, {"status", ok ? "verified" : "hypothesis-failed"},
           {"two_k", res.two_k},        {"two_c", res.two_c}};
    j["failed_hypothesis"] = ok ? json(nullptr) : json(res.failed_hypothesis);
    return {j, ok ? kOk : kInfeasible};
}

Outcome cmd_homology(const std::string &file, const std::optional<std::string> &alpha_qubits) {
    const auto code = load_code_file(file);
    const auto &css = as_css(code, "homology");
    const auto cx = from_css(css);
    json j{{"command", "homology"}, {"file", file}, {"n0", cx.n0()}, {"n1", cx.n1()}, {"n2", cx.n2()}, {"betti1", betti1(cx)}};
    if (alpha_qubits) {
        const auto m = parse_region(*alpha_qubits, css.n());
        const auto alpha = region_subspace(m, RegionLayout::plain_n);
        const auto alpha_perp = region_subspace(m.complement(), RegionLayout::plain_n);
        j["alpha"] = {{"qubits", m.one_based()},
                      {"homology_dim", restricted_class_dim(cx, alpha, HomologySide::homology)},
                      {"cohomology_dim_perp", restricted_class_dim(cx, alpha_perp, HomologySide::cohomology)},
                      {"duality_holds", duality_check(cx, alpha)}};
    }
    return {j};
}

Outcome cmd_universal(const std::string &file) {
    const auto code = load_code_file(file);
    const auto &css = as_css(code, "universal");
    if (css.n() % 2 != 0) throw UsageError("universal needs an even number of qubits");
    const auto res = universal_logops(css, universal_subspace(css.n()));
    return {{{"command", "universal"},
             {"file", file},
             {"k", css.k()},
             {"ell_x", res.ell_x},
             {"ell_z", res.ell_z},
             {"x_reps", bit_rows(res.x_reps)},
             {"z_reps", bit_rows(res.z_reps)}}};
}

Outcome cmd_verify(const std::string &suite, std::size_t trials, std::uint64_t seed, bool oracle, const Globals &g) {
    std::vector<std::string> names;
    if (suite == "all") {
        names = suite_names();
    } else {
        names.push_back(suite);
    }
    json results = json::array();
    bool passed = true;
    for (const auto &name : names) {
        const auto r = run_suite(name, {trials, seed, oracle, g.threads});
        passed = passed && r.failures == 0;
        results.push_back({{"name", r.name},
                           {"checks", r.checks},
                           {"failures", r.failures},
                           {"first_failure", r.first_failure.empty() ? json(nullptr) : json(r.first_failure)}});
    }
    return {{{"command", "verify"},
             {"suite", suite},
             {"trials", trials},
             {"seed", seed},
             {"oracle", oracle},
             {"suites", results},
             {"passed", passed}},
            passed ? kOk : kInvariant};
}

AnyCode generate(const std::string &family, const std::vector<std::string> &params) {
    auto need = [&](std::size_t count, const char *usage) {
        if (params.size() != count) throw UsageError("gen " + family + " expects: " + usage);
    };
    auto p = [&](std::size_t i) { return parse_uint(params[i], "parameter"); };
    if (family == "toric") {
        need(1, "L");
        return toric(p(0));
    }
    if (family == "example42") {
        need(1, "k");
        return example_42(p(0));
    }
    if (family == "repetition") {
        need(1, "n");
        return repetition(p(0));
    }
    if (family == "random-css") {
        need(4, "n mx mz seed");
        return random_css(p(0), p(1), p(2), p(3));
    }
    if (family == "random-stab") {
        need(3, "n s_dim seed");
        return random_stabilizer(p(0), p(1), p(2));
    }
    if (family == "random-gauge") {
        need(3, "n g_dim seed");
        return random_subsystem(p(0), p(1), p(2));
    }
    throw UsageError("unknown family '" + family +
                     "' (toric, example42, repetition, random-css, random-stab, random-gauge)");
}

Outcome cmd_gen(const std::string &family, const std::vector<std::string> &params, const std::string &output,
                const Globals &g, std::ostream &out) {
    const auto code = generate(family, params);
    const auto text = serialize(code);
    if (!output.empty()) {
        std::ofstream f(output, std::ios::binary);
        if (!f || !(f << text)) throw std::runtime_error("cannot write '" + output + "'");
    } else if (!g.json) {
        out << text;
    }
    json j{{"command", "gen"}, {"family", family}, {"params", params}, {"code", summary(code)}};
    j["output"] = output.empty() ? json(nullptr) : json(output);
    if (output.empty()) j["text"] = text;
    // Plain mode already printed the file itself.
    if (output.empty() && !g.json) return {json(nullptr)};
    return {j};
}

std::vector<std::uint32_t> parse_u32_list(const std::string &text, const std::string &what) {
    std::vector<std::uint32_t> out;
    for (const auto &item : split(text, ',')) {
        const auto v = parse_uint(item, what);
        if (v > UINT32_MAX) throw UsageError(what + " " + item + " is too large");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

json coords(const AbelianGroup &g, AbelianGroup::Element e) { return g.decode(e); }

Outcome cmd_abelian(const std::string &moduli_text, const std::string &multipliers_text, const std::string &pairing_text,
                    const std::string &gens_text, const std::string &factors_text) {
    const auto moduli = parse_u32_list(moduli_text, "modulus");
    if (moduli.empty()) throw UsageError("--moduli needs at least one cyclic factor");
    const AbelianGroup g(moduli);
    const std::size_t t = g.num_factors();

    std::optional<Bicharacter> chi;
    if (!pairing_text.empty()) {
        if (!multipliers_text.empty()) throw UsageError("give either --multipliers or --pairing, not both");
        std::vector<std::vector<std::int64_t>> matrix;
        for (const auto &row : split(pairing_text, ';')) {
            std::vector<std::int64_t> entries;
            for (const auto &e : split(row, ',')) entries.push_back(parse_int(e, "pairing entry"));
            matrix.push_back(std::move(entries));
        }
        chi = Bicharacter::from_matrix(g, matrix);
    } else {
        auto multipliers = multipliers_text.empty() ? std::vector<std::uint32_t>(t, 1)
                                                    : parse_u32_list(multipliers_text, "multiplier");
        if (multipliers.size() != t) throw UsageError("--multipliers needs one entry per factor");
        chi = Bicharacter::product(g, multipliers);
    }

    std::vector<AbelianGroup::Element> gens;
    for (const auto &elem : split(gens_text, ';')) {
        const auto c = parse_u32_list(elem, "coordinate");
        if (c.size() != t) throw UsageError("subgroup generator '" + elem + "' needs " + std::to_string(t) + " coordinates");
        gens.push_back(g.encode(c));
    }
    std::vector<std::size_t> factors;
    for (auto f : parse_qubit_list(factors_text)) {
        if (f == 0 || f > t) throw UsageError("factor " + std::to_string(f) + " is out of range 1.." + std::to_string(t));
        factors.push_back(f - 1);
    }

    const auto h = generated_subgroup(g, gens);
    const auto hd = dagger(h, *chi);
    const auto report = abelian_cl(*chi, h, factors);
    const auto alt = abelian_cl_alternative(*chi, h, factors);
    json elements = json::array();
    for (auto e : h.elements()) elements.push_back(coords(g, e));
    json witnesses = json::array();
    for (auto e : alt.coset_witnesses) witnesses.push_back(coords(g, e));
    json j{{"command", "abelian"},
           {"moduli", moduli},
           {"factors", parse_qubit_list(factors_text)},
           {"subgroup", elements},
           {"subgroup_order", h.size()},
           {"dagger_order", hd.size()},
           {"ell_m", report.ell_m.to_string()},
           {"ell_mc", report.ell_mc.to_string()},
           {"quotient", report.quotient.to_string()},
           {"outcome", alt.outcome == CleaningOutcome::nontrivial_supported ? "nontrivial-supported" : "all-cleanable"},
           {"coset_witnesses", witnesses}};
    j["supported_witness"] = alt.supported_witness ? coords(g, *alt.supported_witness) : json(nullptr);
    return {j};
}

// ------------------------------------------------------------- output

void print_plain(const json &j, const std::string &prefix, std::ostream &out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            print_plain(*it, key, out);
        } else if (it->is_array() && !it->empty() && it->front().is_object()) {
            for (std::size_t i = 0; i < it->size(); i++) print_plain((*it)[i], key + "[" + std::to_string(i) + "]", out);
        } else if (it->is_string()) {
            out << key << ": " << it->get<std::string>() << '\n';
        } else {
            out << key << ": " << it->dump() << '\n';
        }
    }
}

void emit(const json &j, const Globals &g, std::ostream &out) {
    if (j.is_null()) return;
    if (g.json) {
        out << j.dump(2) << '\n';
    } else {
        print_plain(j, "", out);
    }
}

int fail(const std::string &command, const char *kind, int code, const std::string &message, const Globals &g,
         std::ostream &out, std::ostream &err) {
    err << "qclean " << command << ": " << message << '\n';
    if (g.json) {
        json j{{"command", command}, {"error", {{"kind", kind}, {"message", message}}}, {"exit_code", code}};
        out << j.dump(2) << '\n';
    }
    return code;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Rank identities of the cleaning lemma over GF(2): codes, lattices, abelian groups", "qclean"};
    app.require_subcommand(1);
    Globals g;
    g.budget = default_budget();
    app.add_flag("--json", g.json, "Emit machine-readable JSON");
    app.add_option("--threads", g.threads, "Worker threads for region scans and verify suites")
        ->check(CLI::Range(1u, 256u));
    app.add_option("--budget", g.budget, "Enumeration budget in steps (default 2^26 or $QCLEAN_BUDGET)")
        ->check(CLI::PositiveNumber);

    std::string file, qubits, op, method = "brute", a, b, c, suite = "all", family, output;
    std::string moduli, multipliers, pairing, subgroup_gens, factors;
    std::optional<std::size_t> max_weight;
    std::optional<std::string> alpha_qubits;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    bool use_oracle = false;
    std::vector<std::string> params;

    auto add = [&](const char *name, const char *help) {
        auto *sub = app.add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    };
    auto *info = add("info", "Code parameters");
    info->add_option("file", file, "Code file")->required();
    auto *region = add("region", "l_M and l_{M^c} for a region");
    region->add_option("file", file, "Code file")->required();
    region->add_option("--qubits", qubits, "1-based qubit list, e.g. 1,3-5")->required();
    auto *clean_cmd = add("clean", "Move a logical operator off a region");
    clean_cmd->add_option("file", file, "Code file")->required();
    clean_cmd->add_option("--qubits", qubits, "Region to clear")->required();
    clean_cmd->add_option("--op", op, "Operator as 2n bits, x block then z block")->required();
    auto *distance = add("distance", "Minimum distance");
    distance->add_option("file", file, "Code file")->required();
    distance->add_option("--max-weight", max_weight, "Largest weight to search");
    distance->add_option("--method", method, "brute or certify")->check(CLI::IsMember({"brute", "certify"}));
    auto *tri = add("tripartition", "Check 2k <= 2|C| for correctable A, B");
    tri->add_option("file", file, "Code file")->required();
    tri->add_option("--A", a, "Region A")->required();
    tri->add_option("--B", b, "Region B")->required();
    tri->add_option("--C", c, "Region C")->required();
    auto *homology = add("homology", "Chain complex view of a CSS code");
    homology->add_option("file", file, "Code file")->required();
    homology->add_option("--alpha-qubits", alpha_qubits, "Region whose class dimensions to report");
    auto *universal = add("universal", "Logical operators inside the universal self-dual subspace");
    universal->add_option("file", file, "Code file")->required();
    auto *verify = add("verify", "Randomized property suites");
    verify->add_option("--suite", suite, "cl, css, subsystem, lattice, abelian or all")
        ->check(CLI::IsMember({"cl", "css", "subsystem", "lattice", "abelian", "all"}));
    verify->add_option("--trials", trials, "Trials per suite");
    verify->add_option("--seed", seed, "Seed");
    verify->add_flag("--oracle", use_oracle, "Cross-check against brute force where feasible");
    auto *gen = add("gen", "Write an example or random code file");
    gen->add_option("family", family, "toric, example42, repetition, random-css, random-stab, random-gauge")->required();
    gen->add_option("params", params, "Family parameters");
    gen->add_option("-o,--output", output, "Output file (default stdout)");
    auto *abelian = add("abelian", "Cleaning lemma in a finite abelian group");
    abelian->add_option("--moduli", moduli, "Cyclic factor orders, e.g. 4,4")->required();
    abelian->add_option("--multipliers", multipliers, "Product bicharacter multipliers (default all 1)");
    abelian->add_option("--pairing", pairing, "Explicit pairing matrix rows, e.g. '0,1;-1,0'");
    abelian->add_option("--subgroup-gens", subgroup_gens, "Generators of H, e.g. '2,2;0,2'");
    abelian->add_option("--factors", factors, "1-based factor indices forming M");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        Outcome result;
        if (info->parsed()) result = cmd_info(file);
        else if (region->parsed()) result = cmd_region(file, qubits);
        else if (clean_cmd->parsed()) result = cmd_clean(file, qubits, op);
        else if (distance->parsed()) result = cmd_distance(file, max_weight, method, g);
        else if (tri->parsed()) result = cmd_tripartition(file, a, b, c);
        else if (homology->parsed()) result = cmd_homology(file, alpha_qubits);
        else if (universal->parsed()) result = cmd_universal(file);
        else if (verify->parsed()) result = cmd_verify(suite, trials, seed, use_oracle, g);
        else if (gen->parsed()) result = cmd_gen(family, params, output, g, out);
        else result = cmd_abelian(moduli, multipliers, pairing, subgroup_gens, factors);
        emit(result.report, g, out);
        return result.exit_code;
    } catch (const UsageError &e) {
        return fail(command, "usage", kUsage, e.what(), g, out, err);
    } catch (const ParseError &e) {
        return fail(command, "parse", kParse, e.what(), g, out, err);
    } catch (const BudgetExceeded &e) {
        return fail(command, "budget", kBudget, e.what(), g, out, err);
    } catch (const Infeasible &e) {
        return fail(command, "infeasible", kInfeasible, e.what(), g, out, err);
    } catch (const InternalCheckFailed &e) {
        return fail(command, "internal", kInvariant, e.what(), g, out, err);
    } catch (const std::invalid_argument &e) {
        // InvariantViolation, PreconditionError and DimensionMismatch.
        return fail(command, "invariant", kInvariant, e.what(), g, out, err);
    } catch (const std::exception &e) {
        return fail(command, "io", kParse, e.what(), g, out, err);
    }
}

}  // namespace qclean::cli

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

#include "verify_suites.h"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qclean/abelian.h"
#include "qclean/codes.h"
#include "qclean/errors.h"
#include "qclean/generators.h"
#include "qclean/graded_lattice.h"
#include "qclean/homology.h"
#include "qclean/oracle.h"
#include "qclean/parallel.h"

namespace qclean::cli {

namespace {

/// Collects pass/fail counts for one trial.
class Tally {
   public:
    void check(bool ok, const std::string &what) {
        checks++;
        if (!ok) fail(what);
    }
    void fail(const std::string &what) {
        failures++;
        if (first_failure.empty()) first_failure = what;
    }

    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

std::string describe(const char *suite, std::size_t trial, const std::string &what) {
    std::ostringstream os;
    os << suite << " trial " << trial << ": " << what;
    return os.str();
}

Region random_region(std::size_t n, SplitMix64 &rng) {
    std::vector<std::size_t> qubits;
    for (std::size_t q = 0; q < n; q++) {
        if (rng.below(2)) qubits.push_back(q);
    }
    return Region(n, std::move(qubits));
}

BitVector random_element(const Subspace &s, SplitMix64 &rng) {
    BitVector v(s.ambient_dim());
    for (std::size_t r = 0; r < s.dim(); r++) {
        if (rng.below(2)) v ^= s.basis().row(r);
    }
    return v;
}

void cl_trial(SplitMix64 &rng, bool use_oracle, Tally &t) {
    const std::size_t n = 1 + rng.below(10);
    const auto code = random_stabilizer(n, rng.below(n + 1), rng.next());
    const auto m = random_region(n, rng);
    t.check(verify_stab_cl(code, m), "l_M + l_Mc != 2k");
    t.check(stab_ell(code, m) <= 2 * code.k(), "l_M out of range");
    const auto v = random_element(code.centralizer(), rng);
    const auto cleaned = clean(code, m, v);
    if (cleaned) {
        bool vanishes = true;
        for (auto q : m.qubits()) vanishes = vanishes && !cleaned->get(q) && !cleaned->get(n + q);
        t.check(vanishes && code.stabilizer().contains(v ^ *cleaned), "cleaned operator is unsound");
    } else {
        t.check(!is_correctable(code, m), "clean failed on a correctable region");
    }
    if (use_oracle && 2 * n <= 16) {
        t.check(oracle::stab_ell(code, m) == stab_ell(code, m), "l_M disagrees with the oracle");
    }
}

void css_trial(SplitMix64 &rng, bool use_oracle, Tally &t) {
    const std::size_t n = 2 + rng.below(11);
    const std::size_t mx = rng.below(n / 2 + 1);
    const std::size_t mz = rng.below(n - mx + 1);
    const auto code = random_css(n, mx, mz, rng.next());
    const auto m = random_region(n, rng);
    const auto e = css_ells(code, m);
    t.check(e.ell_x + e.ell_z_prime == code.k() && e.ell_z + e.ell_x_prime == code.k(), "CSS identities fail");
    const auto stab = css_to_stabilizer(code);
    t.check(stab.k() == code.k(), "embedded stabilizer code has a different k");
    t.check(stab_ell(stab, m) == e.ell_x + e.ell_z, "stabilizer l_M != l_x + l_z");
    t.check(e.ell_x + e.ell_x_prime + e.ell_z + e.ell_z_prime == stab_ell(stab, m) + stab_ell(stab, m.complement()),
            "cruder sum mismatch");
    const auto cx = from_css(code);
    t.check(betti1(cx) == code.k(), "betti1 != k");
    const auto alpha = region_subspace(m, RegionLayout::plain_n);
    t.check(restricted_class_dim(cx, alpha, HomologySide::homology) == e.ell_z, "[alpha] != l_z");
    t.check(restricted_class_dim(cx, alpha, HomologySide::cohomology) == e.ell_x, "cohomology [alpha] != l_x");
    t.check(duality_check(cx, alpha), "duality check failed");
    if (use_oracle && n <= 14) {
        const auto o = oracle::css_ells(code, m);
        t.check(o.ell_x == e.ell_x && o.ell_z == e.ell_z && o.ell_x_prime == e.ell_x_prime &&
                    o.ell_z_prime == e.ell_z_prime,
                "CSS l-values disagree with the oracle");
    }
}

void subsystem_trial(SplitMix64 &rng, bool use_oracle, Tally &t) {
    const std::size_t n = 1 + rng.below(8);
    const auto code = random_subsystem(n, rng.below(2 * n + 1), rng.next());
    const auto m = random_region(n, rng);
    const auto gs = subsystem_gs(code, m);
    t.check(gs.g_dressed_m + gs.g_bare_mc == 2 * code.k(), "g(M) + g_bare(M^c) != 2k");
    if (use_oracle && 2 * n <= 16) {
        const auto o = oracle::subsystem_gs(code, m);
        t.check(o.g_dressed_m == gs.g_dressed_m && o.g_bare_mc == gs.g_bare_mc, "subsystem g disagrees with the oracle");
    }
}

AbelianGroup random_group(SplitMix64 &rng) {
    std::vector<std::uint32_t> moduli;
    const std::size_t t = 1 + rng.below(3);
    std::uint64_t order = 1;
    for (std::size_t j = 0; j < t; j++) {
        const auto n = static_cast<std::uint32_t>(2 + rng.below(5));
        if (order * n > 216) break;
        order *= n;
        moduli.push_back(n);
    }
    return AbelianGroup(moduli);
}

Bicharacter random_product_bicharacter(const AbelianGroup &g, SplitMix64 &rng) {
    std::vector<std::uint32_t> multipliers;
    for (auto n : g.moduli()) {
        std::uint32_t m;
        do {
            m = static_cast<std::uint32_t>(1 + rng.below(n - 1));
        } while (std::gcd(m, n) != 1);
        multipliers.push_back(m);
    }
    return Bicharacter::product(g, multipliers);
}

Subgroup random_subgroup(const AbelianGroup &g, SplitMix64 &rng) {
    std::vector<AbelianGroup::Element> gens;
    const auto count = rng.below(3);
    for (std::uint64_t i = 0; i < count; i++) gens.push_back(static_cast<AbelianGroup::Element>(rng.below(g.order())));
    return generated_subgroup(g, gens);
}

void lattice_trial(SplitMix64 &rng, bool, Tally &t) {
    const std::size_t d = 2 * (1 + rng.below(5));
    const auto form = rng.below(2) ? BilinearForm::symplectic(d) : BilinearForm::euclidean(d);
    const GrassmannianLattice gr(form);
    const auto xi = random_span(d, rng.below(d + 1), rng);
    const auto eta = random_span(d, rng.below(d + 1), rng);
    const auto alpha = random_span(d, rng.below(d + 1), rng);
    t.check(verify_graded_identity(gr, xi, eta, alpha), "Grassmannian rank identity fails");
    t.check(verify_grading_law(gr, xi, alpha), "Grassmannian grading law fails");
    t.check(verify_quasi_complementation(gr, xi, alpha), "annihilator is not a quasi-complementation");
    // xi inside eta^perp for the orthogonal-pair identities.
    const auto eta_perp = annihilator(eta, form);
    const auto xi_o = intersect(xi, eta_perp);
    t.check(verify_orthospace_identity(xi_o, eta, alpha, form), "orthospace identity fails");
    if (form.kind() == FormKind::euclidean_dot) {
        t.check(verify_factor_annihilator(xi_o, eta, alpha), "factor annihilator identity fails");
    } else {
        const auto sigma = intersect(xi, annihilator(xi, form));
        t.check(q_sigma_duality_check(sigma, alpha, form), "q_sigma duality fails");
    }

    const auto g = random_group(rng);
    const SubgroupLattice lat(random_product_bicharacter(g, rng));
    const auto a = random_subgroup(g, rng);
    const auto b = random_subgroup(g, rng);
    const auto c = random_subgroup(g, rng);
    t.check(verify_graded_identity(lat, a, b, c), "subgroup rank identity fails");
    t.check(verify_grading_law(lat, a, b), "subgroup grading law fails");
    t.check(verify_common_product(lat, a, b), "|A| |A^dag| is not constant");
    t.check(verify_quasi_complementation(lat, a, b), "dagger is not a quasi-complementation");
}

void abelian_trial(SplitMix64 &rng, bool use_oracle, Tally &t) {
    const auto g = random_group(rng);
    const auto chi = random_product_bicharacter(g, rng);
    const auto h0 = random_subgroup(g, rng);
    const auto h = subgroup_meet(h0, dagger(h0, chi));
    std::vector<std::size_t> factors;
    for (std::size_t j = 0; j < g.num_factors(); j++) {
        if (rng.below(2)) factors.push_back(j);
    }
    const auto report = abelian_cl(chi, h, factors);
    t.check(report.ell_m * report.ell_mc == report.quotient, "l_M l_Mc != |H^dag / H|");
    const auto alt = abelian_cl_alternative(chi, h, factors);
    if (alt.outcome == CleaningOutcome::nontrivial_supported) {
        t.check(!(report.ell_m == Rational(1)), "nontrivial-supported with l_M = 1");
    } else {
        t.check(report.ell_m == Rational(1), "all-cleanable with l_M > 1");
        t.check(Rational(alt.coset_witnesses.size()) == report.quotient, "wrong number of coset witnesses");
    }
    if (use_oracle) {
        t.check(oracle::subgroup_dagger_brute(h, chi) == dagger(h, chi), "dagger disagrees with the oracle");
    }
}

using Trial = std::function<void(SplitMix64 &, bool, Tally &)>;

Trial trial_for(const std::string &name) {
    if (name == "cl") return cl_trial;
    if (name == "css") return css_trial;
    if (name == "subsystem") return subsystem_trial;
    if (name == "lattice") return lattice_trial;
    if (name == "abelian") return abelian_trial;
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::uint64_t salt(const std::string &name) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ull;
    return h;
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = {"cl", "css", "subsystem", "lattice", "abelian"};
    return names;
}

SuiteResult run_suite(const std::string &name, const SuiteOptions &options) {
    const auto trial = trial_for(name);
    const std::size_t chunks = std::max(1u, options.threads);
    std::vector<Tally> tallies(chunks);
    parallel_chunks(options.trials, options.threads, [&](std::size_t begin, std::size_t end, unsigned chunk) {
        for (std::size_t i = begin; i < end; i++) {
            // Each trial seeds its own generator, so results do not depend on threading.
            SplitMix64 rng(options.seed ^ salt(name) ^ (0xd1b54a32d192ed03ull * (i + 1)));
            Tally local;
            try {
                trial(rng, options.oracle, local);
            } catch (const std::exception &e) {
                local.fail(std::string("exception: ") + e.what());
            }
            auto &tally = tallies[chunk];
            tally.checks += local.checks;
            tally.failures += local.failures;
            if (tally.first_failure.empty() && !local.first_failure.empty()) {
                tally.first_failure = describe(name.c_str(), i, local.first_failure);
            }
        }
    });
    SuiteResult result{name, 0, 0, ""};
    for (const auto &tally : tallies) {
        result.checks += tally.checks;
        result.failures += tally.failures;
        if (result.first_failure.empty()) result.first_failure = tally.first_failure;
    }
    return result;
}

}  // namespace qclean::cli

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

#include "qclean/codes.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <string>

#include "qclean/errors.h"
#include "qclean/linalg.h"
#include "qclean/parallel.h"

namespace qclean {

std::uint64_t default_budget() {
    if (const char *env = std::getenv("QCLEAN_BUDGET")) {
        char *end = nullptr;
        auto value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return value;
    }
    return std::uint64_t{1} << 26;
}

// ---------------------------------------------------------------- Region

Region::Region(std::size_t n, std::vector<std::size_t> qubits) : n_(n), qubits_(std::move(qubits)) {
    std::sort(qubits_.begin(), qubits_.end());
    for (std::size_t i = 0; i < qubits_.size(); i++) {
        if (qubits_[i] >= n_) {
            throw InvariantViolation("qubit " + std::to_string(qubits_[i] + 1) + " is out of range 1.." +
                                     std::to_string(n_));
        }
        if (i > 0 && qubits_[i] == qubits_[i - 1]) {
            throw InvariantViolation("qubit " + std::to_string(qubits_[i] + 1) + " is listed twice");
        }
    }
}

Region Region::from_one_based(std::size_t n, std::span<const std::size_t> qubits) {
    std::vector<std::size_t> zero_based;
    for (auto q : qubits) {
        if (q == 0 || q > n) {
            throw InvariantViolation("qubit " + std::to_string(q) + " is out of range 1.." + std::to_string(n));
        }
        zero_based.push_back(q - 1);
    }
    return Region(n, std::move(zero_based));
}

Region Region::from_mask(std::size_t n, std::uint64_t mask) {
    if (n > 64) throw PreconditionError("Region::from_mask needs n <= 64");
    if (n < 64 && (mask >> n) != 0) throw InvariantViolation("region mask has bits beyond qubit " + std::to_string(n));
    std::vector<std::size_t> qubits;
    for (std::size_t q = 0; q < n; q++) {
        if ((mask >> q) & 1) qubits.push_back(q);
    }
    return Region(n, std::move(qubits));
}

Region Region::all(std::size_t n) {
    std::vector<std::size_t> qubits(n);
    for (std::size_t q = 0; q < n; q++) qubits[q] = q;
    return Region(n, std::move(qubits));
}

bool Region::contains(std::size_t q) const { return std::binary_search(qubits_.begin(), qubits_.end(), q); }

Region Region::complement() const {
    std::vector<std::size_t> rest;
    for (std::size_t q = 0; q < n_; q++) {
        if (!contains(q)) rest.push_back(q);
    }
    return Region(n_, std::move(rest));
}

std::vector<std::size_t> Region::one_based() const {
    std::vector<std::size_t> out;
    for (auto q : qubits_) out.push_back(q + 1);
    return out;
}

Subspace region_subspace(const Region &r, RegionLayout layout) {
    const std::size_t n = r.n();
    const std::size_t d = layout == RegionLayout::symplectic_2n ? 2 * n : n;
    std::vector<BitVector> gens;
    for (auto q : r.qubits()) {
        gens.push_back(BitVector::unit(d, q));
        if (layout == RegionLayout::symplectic_2n) gens.push_back(BitVector::unit(d, n + q));
    }
    return Subspace::span(gens, d);
}

std::size_t qubit_weight(const BitVector &v) {
    if (v.size() % 2 != 0) throw DimensionMismatch("symplectic vector of odd length " + std::to_string(v.size()));
    const std::size_t n = v.size() / 2;
    std::size_t w = 0;
    for (std::size_t q = 0; q < n; q++) {
        w += (v.get(q) || v.get(n + q)) ? 1 : 0;
    }
    return w;
}

namespace {

void require_n(std::size_t code_n, const Region &m) {
    if (m.n() != code_n) {
        throw DimensionMismatch("region on " + std::to_string(m.n()) + " qubits for a code on " +
                                std::to_string(code_n));
    }
}

/// dim(u n alpha) - dim(v n alpha).
std::size_t restricted_dim(const Subspace &u, const Subspace &v, const Subspace &alpha) {
    return restricted_quotient_dim(u, v, alpha);
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    // Saturates instead of overflowing: callers compare against budgets.
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
        if (r > (unsigned __int128)UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 r = (unsigned __int128)a * b;
    return r > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(r);
}

/// Calls f(subset) for every w-subset of [0, n) in lexicographic order; stops
/// early when f returns false. Returns false iff stopped early.
bool for_each_subset(std::size_t n, std::size_t w, const std::function<bool(const std::vector<std::size_t> &)> &f) {
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; i++) idx[i] = i;
    if (w > n) return true;
    while (true) {
        if (!f(idx)) return false;
        std::size_t i = w;
        while (i > 0 && idx[i - 1] == n - w + i - 1) i--;
        if (i == 0) return true;
        idx[i - 1]++;
        for (std::size_t j = i; j < w; j++) idx[j] = idx[j - 1] + 1;
    }
}

/// Unrank the r-th w-subset of [0, n) in lexicographic order.
std::vector<std::size_t> unrank_subset(std::size_t n, std::size_t w, std::uint64_t r) {
    std::vector<std::size_t> out;
    std::size_t next = 0;
    for (std::size_t slot = 0; slot < w; slot++) {
        for (std::size_t q = next; q < n; q++) {
            auto count = binomial(n - q - 1, w - slot - 1);
            if (r < count) {
                out.push_back(q);
                next = q + 1;
                break;
            }
            r -= count;
        }
    }
    return out;
}

}  // namespace

// ------------------------------------------------------- StabilizerCode

StabilizerCode::StabilizerCode(std::size_t n, Subspace stabilizer)
    : n_(n), generators_(stabilizer.basis()), s_(std::move(stabilizer)) {
    if (s_.ambient_dim() != 2 * n_) {
        throw DimensionMismatch("stabilizer lives in F2^" + std::to_string(s_.ambient_dim()) + ", expected F2^" +
                                std::to_string(2 * n_));
    }
    const auto f = form();
    s_perp_ = annihilator(s_, f);
    if (!s_perp_.contains(s_)) {
        throw InvariantViolation("stabilizer subspace is not isotropic: some generators anticommute");
    }
    QCLEAN_CHECK(s_perp_.dim() == n_ + k(), "dim S^perp = n + k");
}

StabilizerCode StabilizerCode::from_generators(std::size_t n, const BitMatrix &generators) {
    if (generators.cols() != 2 * n) {
        throw DimensionMismatch("stabilizer generators need " + std::to_string(2 * n) + " columns, got " +
                                std::to_string(generators.cols()));
    }
    StabilizerCode code(n, Subspace::span(generators));
    code.generators_ = generators;
    return code;
}

std::size_t stab_ell(const StabilizerCode &c, const Region &m) {
    require_n(c.n(), m);
    auto alpha = region_subspace(m, RegionLayout::symplectic_2n);
    return restricted_dim(c.centralizer(), c.stabilizer(), alpha);
}

bool verify_stab_cl(const StabilizerCode &c, const Region &m) {
    return stab_ell(c, m) + stab_ell(c, m.complement()) == 2 * c.k();
}

bool is_correctable(const StabilizerCode &c, const Region &m) { return stab_ell(c, m) == 0; }

std::optional<BitVector> clean(const StabilizerCode &c, const Region &m, const BitVector &v) {
    require_n(c.n(), m);
    if (v.size() != 2 * c.n()) {
        throw DimensionMismatch("operator of length " + std::to_string(v.size()) + " for a code on " +
                                std::to_string(c.n()) + " qubits");
    }
    if (!c.centralizer().contains(v)) {
        throw PreconditionError("operator is not in S^perp: it does not commute with the stabilizer");
    }
    const auto &gens = c.generators();
    std::vector<std::size_t> coords;
    for (auto q : m.qubits()) coords.push_back(q);
    for (auto q : m.qubits()) coords.push_back(c.n() + q);

    // Row i: coordinate coords[i] of every generator. Solve for coefficients
    // whose combination matches v on those coordinates.
    BitMatrix system(coords.size(), gens.rows());
    BitVector rhs(coords.size());
    for (std::size_t i = 0; i < coords.size(); i++) {
        for (std::size_t j = 0; j < gens.rows(); j++) {
            if (gens.get(j, coords[i])) system.set(i, j);
        }
        if (v.get(coords[i])) rhs.set(i);
    }
    auto coeffs = solve(system, rhs);
    if (!coeffs) return std::nullopt;
    BitVector out = v;
    for (std::size_t j = 0; j < gens.rows(); j++) {
        if (coeffs->get(j)) out ^= gens.row(j);
    }
    for (auto q : coords) QCLEAN_CHECK(!out.get(q), "cleaned operator vanishes on the region");
    return out;
}

namespace {

std::optional<std::size_t> distance_by_centralizer(const StabilizerCode &c, std::size_t max_weight) {
    // Basis of S^perp that extends the basis of S: a combination lies outside
    // S iff it uses one of the extension vectors.
    const auto &s = c.stabilizer();
    std::vector<BitVector> basis = s.basis().row_vectors();
    const std::size_t r = basis.size();
    Subspace spanned = s;
    for (const auto &u : c.centralizer().basis().row_vectors()) {
        if (!spanned.contains(u)) {
            basis.push_back(u);
            spanned = sum(spanned, Subspace::span(std::span<const BitVector>(&u, 1), u.size()));
        }
    }
    QCLEAN_CHECK(basis.size() == c.centralizer().dim(), "extended basis spans S^perp");

    const std::size_t n = c.n();
    std::vector<std::uint64_t> bx, bz;
    for (const auto &b : basis) {
        std::uint64_t x = 0, z = 0;
        for (std::size_t q = 0; q < n; q++) {
            x |= std::uint64_t{b.get(q)} << q;
            z |= std::uint64_t{b.get(n + q)} << q;
        }
        bx.push_back(x);
        bz.push_back(z);
    }
    // Gray code walk: one basis vector toggled per step.
    std::uint64_t x = 0, z = 0, combo = 0;
    std::size_t best = n + 1;
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t i = 1; i < total; i++) {
        const int bit = std::countr_zero(i);
        x ^= bx[bit];
        z ^= bz[bit];
        combo ^= std::uint64_t{1} << bit;
        if ((combo >> r) != 0) {
            best = std::min<std::size_t>(best, std::popcount(x | z));
        }
    }
    if (best > max_weight) return std::nullopt;
    return best;
}

std::optional<std::size_t> distance_by_weight(const StabilizerCode &c, std::size_t max_weight, std::uint64_t budget) {
    const std::size_t n = c.n();
    const auto f = c.form();
    const auto &gens = c.stabilizer().basis();
    const std::size_t r = gens.rows();
    // syndrome[3q + p] for p = X, Z, Y acting on qubit q.
    std::vector<BitVector> syndrome;
    for (std::size_t q = 0; q < n; q++) {
        auto px = BitVector::unit(2 * n, q);
        auto pz = BitVector::unit(2 * n, n + q);
        for (const auto &p : {px, pz, px ^ pz}) {
            BitVector s(r);
            for (std::size_t j = 0; j < r; j++) {
                if (f.pair(gens.row(j), p)) s.set(j);
            }
            syndrome.push_back(std::move(s));
        }
    }
    std::uint64_t spent = 0;
    for (std::size_t w = 1; w <= std::min(max_weight, n); w++) {
        const auto cost = saturating_mul(binomial(n, w), static_cast<std::uint64_t>(std::pow(3.0, double(w))));
        if (spent + cost > budget || cost == UINT64_MAX) {
            throw BudgetExceeded("distance search at weight " + std::to_string(w), double(spent) + double(cost),
                                 double(budget));
        }
        spent += cost;
        bool found = false;
        for_each_subset(n, w, [&](const std::vector<std::size_t> &support) {
            std::vector<int> choice(w, 0);
            while (true) {
                BitVector s(r);
                for (std::size_t i = 0; i < w; i++) s ^= syndrome[3 * support[i] + choice[i]];
                if (s.is_zero()) {
                    BitVector v(2 * n);
                    for (std::size_t i = 0; i < w; i++) {
                        if (choice[i] != 1) v.set(support[i]);
                        if (choice[i] != 0) v.set(n + support[i]);
                    }
                    if (!c.stabilizer().contains(v)) {
                        found = true;
                        return false;
                    }
                }
                std::size_t i = 0;
                while (i < w && choice[i] == 2) choice[i++] = 0;
                if (i == w) return true;
                choice[i]++;
            }
        });
        if (found) return w;
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::size_t> distance_brute(const StabilizerCode &c, std::size_t max_weight, std::uint64_t budget) {
    if (c.k() == 0 || max_weight == 0) return std::nullopt;
    const std::size_t dim = c.centralizer().dim();
    if (dim <= 22 && (std::uint64_t{1} << dim) <= budget) {
        return distance_by_centralizer(c, max_weight);
    }
    return distance_by_weight(c, max_weight, budget);
}

bool distance_certify_lb(const StabilizerCode &c, std::size_t w, std::uint64_t budget, unsigned threads) {
    if (w == 0) return true;
    if (w > c.n()) return true;
    const auto regions = binomial(c.n(), w);
    if (regions > budget) {
        throw BudgetExceeded("certifying all " + std::to_string(w) + "-qubit regions", double(regions),
                             double(budget));
    }
    std::atomic<bool> ok{true};
    parallel_chunks(static_cast<std::size_t>(regions), threads, [&](std::size_t begin, std::size_t end, unsigned) {
        if (begin >= end) return;
        auto first = unrank_subset(c.n(), w, begin);
        std::size_t index = begin;
        std::vector<std::size_t> idx = first;
        while (index < end && ok.load(std::memory_order_relaxed)) {
            if (!is_correctable(c, Region(c.n(), idx))) {
                ok = false;
                return;
            }
            index++;
            std::size_t i = w;
            while (i > 0 && idx[i - 1] == c.n() - w + i - 1) i--;
            if (i == 0) break;
            idx[i - 1]++;
            for (std::size_t j = i; j < w; j++) idx[j] = idx[j - 1] + 1;
        }
    });
    return ok;
}

// -------------------------------------------------------------- CssCode

CssCode::CssCode(BitMatrix hx, BitMatrix hz) : hx_(std::move(hx)), hz_(std::move(hz)) {
    if (hx_.cols() != hz_.cols()) {
        throw DimensionMismatch("H_x has " + std::to_string(hx_.cols()) + " columns but H_z has " +
                                std::to_string(hz_.cols()));
    }
    for (std::size_t i = 0; i < hx_.rows(); i++) {
        for (std::size_t j = 0; j < hz_.rows(); j++) {
            if (dot(hx_.row(i), hz_.row(j))) {
                throw InvariantViolation("H_x H_z^T != 0 at row pair (" + std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) + ")");
            }
        }
    }
    xi_ = Subspace::span(hx_);
    eta_ = Subspace::span(hz_);
    ker_hx_ = Subspace::span(kernel_basis(hx_));
    ker_hz_ = Subspace::span(kernel_basis(hz_));
}

CssElls css_ells(const CssCode &c, const Subspace &alpha) {
    if (alpha.ambient_dim() != c.n()) {
        throw DimensionMismatch("alpha lives in F2^" + std::to_string(alpha.ambient_dim()) + ", expected F2^" +
                                std::to_string(c.n()));
    }
    const auto alpha_perp = annihilator(alpha, BilinearForm::euclidean(c.n()));
    CssElls e{
        restricted_dim(c.ker_hz(), c.xi(), alpha),
        restricted_dim(c.ker_hx(), c.eta(), alpha),
        restricted_dim(c.ker_hz(), c.xi(), alpha_perp),
        restricted_dim(c.ker_hx(), c.eta(), alpha_perp),
    };
    QCLEAN_CHECK(e.ell_x + e.ell_z_prime == c.k(), "l_x + l_z' = k");
    QCLEAN_CHECK(e.ell_z + e.ell_x_prime == c.k(), "l_z + l_x' = k");
    return e;
}

CssElls css_ells(const CssCode &c, const Region &m) {
    require_n(c.n(), m);
    return css_ells(c, region_subspace(m, RegionLayout::plain_n));
}

StabilizerCode css_to_stabilizer(const CssCode &c) {
    const BitMatrix zeros_x(c.hx().rows(), c.n());
    const BitMatrix zeros_z(c.hz().rows(), c.n());
    auto gens = BitMatrix::vstack(BitMatrix::hstack(c.hx(), zeros_x), BitMatrix::hstack(zeros_z, c.hz()));
    return StabilizerCode::from_generators(c.n(), gens);
}

// -------------------------------------------------------- SubsystemCode

SubsystemCode::SubsystemCode(std::size_t n, Subspace gauge) : n_(n), generators_(gauge.basis()), gauge_(std::move(gauge)) {
    if (gauge_.ambient_dim() != 2 * n_) {
        throw DimensionMismatch("gauge group lives in F2^" + std::to_string(gauge_.ambient_dim()) +
                                ", expected F2^" + std::to_string(2 * n_));
    }
    const auto f = BilinearForm::symplectic(2 * n_);
    gauge_perp_ = annihilator(gauge_, f);
    s_ = intersect(gauge_, gauge_perp_);
    s_perp_ = annihilator(s_, f);
    // dim G = n - k + g and dim S = n - k - g.
    const std::size_t dg = gauge_.dim(), ds = s_.dim();
    if ((dg - ds) % 2 != 0 || dg + ds > 2 * n_) {
        throw InvariantViolation("gauge group gives non-integral or negative k, g (dim G = " + std::to_string(dg) +
                                 ", dim S = " + std::to_string(ds) + ")");
    }
    g_ = (dg - ds) / 2;
    k_ = n_ - (dg + ds) / 2;
    QCLEAN_CHECK(s_perp_ == sum(gauge_, gauge_perp_), "S^perp = G + G^perp");
    QCLEAN_CHECK(s_perp_.dim() == n_ + k_ + g_, "dim S^perp = n + k + g");
}

SubsystemCode SubsystemCode::from_generators(std::size_t n, const BitMatrix &generators) {
    if (generators.cols() != 2 * n) {
        throw DimensionMismatch("gauge generators need " + std::to_string(2 * n) + " columns, got " +
                                std::to_string(generators.cols()));
    }
    SubsystemCode code(n, Subspace::span(generators));
    code.generators_ = generators;
    return code;
}

SubsystemGs subsystem_gs(const SubsystemCode &c, const Region &m) {
    require_n(c.n(), m);
    const auto alpha = region_subspace(m, RegionLayout::symplectic_2n);
    const auto alpha_perp = region_subspace(m.complement(), RegionLayout::symplectic_2n);
    SubsystemGs out{
        sum(intersect(c.stabilizer_perp(), alpha), c.gauge()).dim() - c.gauge().dim(),
        sum(intersect(c.gauge_perp(), alpha_perp), c.stabilizer()).dim() - c.stabilizer().dim(),
    };
    QCLEAN_CHECK(out.g_dressed_m + out.g_bare_mc == 2 * c.k(), "g(M) + g_bare(M^c) = 2k");
    return out;
}

// ------------------------------------------------------- logical ops

Subspace universal_subspace(std::size_t n) {
    if (n % 2 != 0) throw PreconditionError("a self-dual subspace of F2^n needs even n, got " + std::to_string(n));
    std::vector<BitVector> gens;
    for (std::size_t i = 0; i < n / 2; i++) {
        BitVector v(n);
        v.set(i);
        v.set(n / 2 + i);
        gens.push_back(std::move(v));
    }
    return Subspace::span(gens, n);
}

namespace {

/// Rows of `pool` chosen greedily so that they are independent modulo `base`.
BitMatrix independent_mod(const Subspace &pool, const Subspace &base) {
    BitMatrix out(0, pool.ambient_dim());
    Subspace spanned = base;
    for (const auto &u : pool.basis().row_vectors()) {
        if (!spanned.contains(u)) {
            out.append_row(u);
            spanned = sum(spanned, Subspace::span(std::span<const BitVector>(&u, 1), u.size()));
        }
    }
    return out;
}

}  // namespace

UniversalLogops universal_logops(const CssCode &c, const Subspace &alpha) {
    if (alpha.ambient_dim() != c.n()) {
        throw DimensionMismatch("alpha lives in F2^" + std::to_string(alpha.ambient_dim()) + ", expected F2^" +
                                std::to_string(c.n()));
    }
    if (!(annihilator(alpha, BilinearForm::euclidean(c.n())) == alpha)) {
        throw PreconditionError("alpha is not equal to its own orthogonal complement");
    }
    UniversalLogops out;
    out.x_reps = independent_mod(intersect(c.ker_hz(), alpha), c.xi());
    out.z_reps = independent_mod(intersect(c.ker_hx(), alpha), c.eta());
    out.ell_x = out.x_reps.rows();
    out.ell_z = out.z_reps.rows();
    const auto e = css_ells(c, alpha);
    QCLEAN_CHECK(out.ell_x == e.ell_x && out.ell_z == e.ell_z, "representative counts match l_x, l_z");
    QCLEAN_CHECK(out.ell_x + out.ell_z == c.k(), "l_x + l_z = k for self-dual alpha");
    return out;
}

TripartitionResult tripartition_bound(const StabilizerCode &c, const Region &a, const Region &b, const Region &g) {
    require_n(c.n(), a);
    require_n(c.n(), b);
    require_n(c.n(), g);
    for (std::size_t q = 0; q < c.n(); q++) {
        const int hits = int(a.contains(q)) + int(b.contains(q)) + int(g.contains(q));
        if (hits != 1) {
            throw PreconditionError("regions A, B, C do not partition the qubits: qubit " + std::to_string(q + 1) +
                                    " appears " + std::to_string(hits) + " times");
        }
    }
    const auto f = c.form();
    const auto alpha = region_subspace(a, RegionLayout::symplectic_2n);
    const auto beta = region_subspace(b, RegionLayout::symplectic_2n);
    const auto gamma = region_subspace(g, RegionLayout::symplectic_2n);

    TripartitionResult out{TripartitionStatus::verified, "", 2 * c.k(), gamma.dim()};
    auto fail = [&](std::string what) {
        out.status = TripartitionStatus::hypothesis_failed;
        out.failed_hypothesis = std::move(what);
        return out;
    };
    if (!are_orthogonal(beta, gamma, f)) return fail("beta orthogonal to gamma");
    if (!(alpha == annihilator(sum(beta, gamma), f))) return fail("alpha = (beta + gamma)^perp");
    if (!c.stabilizer().contains(intersect(c.centralizer(), alpha))) return fail("A correctable");
    if (!c.stabilizer().contains(intersect(c.centralizer(), beta))) return fail("B correctable");
    QCLEAN_CHECK(out.two_k <= out.two_c, "2k <= 2|C| under the tripartition hypotheses");
    return out;
}

}  // namespace qclean

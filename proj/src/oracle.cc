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

#include "qclean/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "qclean/errors.h"

namespace qclean::oracle {

namespace {

void require_dim(std::size_t d, std::size_t cap, const char *what) {
    if (d > cap) {
        throw BudgetExceeded(std::string(what) + " over F2^" + std::to_string(d), std::ldexp(1.0, int(d)),
                             std::ldexp(1.0, int(cap)));
    }
}

BitVector unpack(std::size_t d, std::uint64_t x) { return BitVector::from_word(d, x); }

bool supported_on(const BitVector &v, const Region &m, bool symplectic) {
    const std::size_t n = m.n();
    for (std::size_t q = 0; q < n; q++) {
        if (m.contains(q)) continue;
        if (v.get(q)) return false;
        if (symplectic && v.get(n + q)) return false;
    }
    return true;
}

bool orthogonal_to_all(const BitVector &v, const BitMatrix &rows) {
    for (std::size_t r = 0; r < rows.rows(); r++) {
        bool parity = false;
        for (std::size_t i = 0; i < v.size(); i++) parity ^= v.get(i) && rows.get(r, i);
        if (parity) return false;
    }
    return true;
}

}  // namespace

std::uint64_t pack(const BitVector &v) {
    if (v.size() > 64) throw DimensionMismatch("pack needs at most 64 coordinates");
    return v.size() == 0 ? 0 : v.words()[0];
}

std::size_t enum_subspace_dim(std::size_t d, const std::function<bool(const BitVector &)> &pred) {
    require_dim(d, kMaxEnumDim, "enum_subspace_dim");
    std::vector<std::uint64_t> members;
    std::unordered_set<std::uint64_t> lookup;
    const std::uint64_t total = std::uint64_t{1} << d;
    for (std::uint64_t x = 0; x < total; x++) {
        if (pred(unpack(d, x))) {
            members.push_back(x);
            lookup.insert(x);
        }
    }
    const std::size_t count = members.size();
    if (count == 0 || !std::has_single_bit(count)) {
        throw InvariantViolation("predicate holds on " + std::to_string(count) +
                                 " vectors, which is not a power of two");
    }
    // Closure spot check on up to 64 x 64 member pairs spread over the set.
    const std::size_t step = std::max<std::size_t>(1, count / 64);
    for (std::size_t i = 0; i < count; i += step) {
        for (std::size_t j = 0; j < count; j += step) {
            if (!lookup.count(members[i] ^ members[j])) {
                throw InvariantViolation("predicate is not closed under addition");
            }
        }
    }
    return static_cast<std::size_t>(std::countr_zero(count));
}

SpanSet::SpanSet(const BitMatrix &rows) {
    if (rows.cols() > 64) throw DimensionMismatch("SpanSet needs at most 64 columns");
    set_.insert(0);
    for (std::size_t r = 0; r < rows.rows(); r++) {
        const std::uint64_t g = pack(rows.row(r));
        if (set_.count(g)) continue;
        std::vector<std::uint64_t> current(set_.begin(), set_.end());
        for (auto x : current) set_.insert(x ^ g);
    }
}

bool SpanSet::contains(const BitVector &v) const { return contains(pack(v)); }

bool commutes_with_all(const BitVector &v, const BitMatrix &generators) {
    const std::size_t n = v.size() / 2;
    for (std::size_t r = 0; r < generators.rows(); r++) {
        bool parity = false;
        for (std::size_t q = 0; q < n; q++) {
            parity ^= v.get(q) && generators.get(r, n + q);
            parity ^= v.get(n + q) && generators.get(r, q);
        }
        if (parity) return false;
    }
    return true;
}

std::size_t stab_ell(const StabilizerCode &c, const Region &m) {
    const auto &gens = c.stabilizer().basis();
    const SpanSet s(gens);
    const std::size_t d = 2 * c.n();
    const auto logical = enum_subspace_dim(d, [&](const BitVector &v) {
        return supported_on(v, m, true) && commutes_with_all(v, gens);
    });
    const auto degenerate = enum_subspace_dim(d, [&](const BitVector &v) {
        return supported_on(v, m, true) && s.contains(v);
    });
    return logical - degenerate;
}

CssElls css_ells(const CssCode &c, const Region &m) {
    const std::size_t n = c.n();
    const SpanSet xi(c.hx()), eta(c.hz());
    const Region mc = m.complement();
    auto count = [&](const Region &r, const BitMatrix &checks, const SpanSet &degenerate) {
        const auto all = enum_subspace_dim(n, [&](const BitVector &v) {
            return supported_on(v, r, false) && orthogonal_to_all(v, checks);
        });
        const auto deg = enum_subspace_dim(n, [&](const BitVector &v) {
            return supported_on(v, r, false) && degenerate.contains(v);
        });
        return all - deg;
    };
    return {count(m, c.hz(), xi), count(m, c.hx(), eta), count(mc, c.hz(), xi), count(mc, c.hx(), eta)};
}

SubsystemGs subsystem_gs(const SubsystemCode &c, const Region &m) {
    const std::size_t d = 2 * c.n();
    const auto &g_rows = c.gauge().basis();
    const SpanSet g(g_rows);
    // S = elements of G commuting with all of G.
    BitMatrix s_rows(0, d);
    for (auto x : g.elements()) {
        auto v = unpack(d, x);
        if (commutes_with_all(v, g_rows)) s_rows.append_row(v);
    }
    const SpanSet s(s_rows);
    const Region mc = m.complement();
    const auto dressed = enum_subspace_dim(d, [&](const BitVector &v) {
        return supported_on(v, m, true) && commutes_with_all(v, s_rows);
    });
    const auto dressed_in_g = enum_subspace_dim(d, [&](const BitVector &v) {
        return supported_on(v, m, true) && commutes_with_all(v, s_rows) && g.contains(v);
    });
    const auto bare = enum_subspace_dim(d, [&](const BitVector &v) {
        return supported_on(v, mc, true) && commutes_with_all(v, g_rows);
    });
    const auto bare_in_s = enum_subspace_dim(d, [&](const BitVector &v) {
        return supported_on(v, mc, true) && commutes_with_all(v, g_rows) && s.contains(v);
    });
    return {dressed - dressed_in_g, bare - bare_in_s};
}

std::optional<std::size_t> brute_distance(const StabilizerCode &c) {
    const std::size_t n = c.n();
    require_dim(2 * n, 24, "brute_distance");
    if (c.k() == 0) return std::nullopt;
    const auto &gens = c.stabilizer().basis();
    std::vector<std::uint64_t> gx, gz;
    for (std::size_t r = 0; r < gens.rows(); r++) {
        std::uint64_t x = 0, z = 0;
        for (std::size_t q = 0; q < n; q++) {
            x |= std::uint64_t{gens.get(r, q)} << q;
            z |= std::uint64_t{gens.get(r, n + q)} << q;
        }
        gx.push_back(x);
        gz.push_back(z);
    }
    const SpanSet s(gens);
    std::optional<std::size_t> best;
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << (2 * n)); v++) {
        const std::uint64_t x = v & mask, z = v >> n;
        const std::size_t w = std::popcount(x | z);
        if (best && w >= *best) continue;
        bool commutes = true;
        for (std::size_t r = 0; r < gx.size() && commutes; r++) {
            commutes = (std::popcount((x & gz[r]) ^ (z & gx[r])) & 1) == 0;
        }
        if (commutes && !s.contains(v)) best = w;
    }
    return best;
}

Subgroup subgroup_dagger_brute(const Subgroup &h, const Bicharacter &chi) {
    const auto &g = chi.group();
    if (g.order() > 4096) {
        throw BudgetExceeded("subgroup_dagger_brute", double(g.order()) * g.order(), 4096.0 * 4096.0);
    }
    if (!(h.parent() == g)) throw DimensionMismatch("subgroup and bicharacter live on different groups");
    const auto members = h.elements();
    std::vector<AbelianGroup::Element> out;
    for (AbelianGroup::Element x = 0; x < g.order(); x++) {
        bool all_trivial = true;
        for (auto y : members) {
            if (chi.value(y, x) != 0) {
                all_trivial = false;
                break;
            }
        }
        if (all_trivial) out.push_back(x);
    }
    return Subgroup::from_elements(g, out);
}

}  // namespace qclean::oracle

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

#include "qclean/abelian.h"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "qclean/errors.h"

namespace qclean {

using Element = AbelianGroup::Element;

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> moduli) {
    auto data = std::make_shared<Data>();
    std::uint64_t order = 1;
    for (auto n : moduli) {
        if (n < 2) {
            throw PreconditionError("cyclic factor orders must be >= 2, got " + std::to_string(n));
        }
        data->strides.push_back(static_cast<std::uint32_t>(order));
        order *= n;
        if (order > kMaxOrder) {
            throw PreconditionError("group order exceeds the enumeration cap of " + std::to_string(kMaxOrder));
        }
        data->exponent = std::lcm(data->exponent, std::uint64_t{n});
    }
    data->order = static_cast<std::uint32_t>(order);
    data->moduli = std::move(moduli);
    data_ = std::move(data);
}

Element AbelianGroup::encode(std::span<const std::uint32_t> coords) const {
    if (coords.size() != num_factors()) {
        throw DimensionMismatch("element with " + std::to_string(coords.size()) + " components for a group with " +
                                std::to_string(num_factors()) + " factors");
    }
    Element g = 0;
    for (std::size_t j = 0; j < coords.size(); j++) {
        g += (coords[j] % data_->moduli[j]) * data_->strides[j];
    }
    return g;
}

std::vector<std::uint32_t> AbelianGroup::decode(Element g) const {
    std::vector<std::uint32_t> out(num_factors());
    for (std::size_t j = 0; j < out.size(); j++) {
        out[j] = component(g, j);
    }
    return out;
}

Element AbelianGroup::add(Element a, Element b) const {
    Element out = 0;
    for (std::size_t j = 0; j < data_->moduli.size(); j++) {
        std::uint32_t n = data_->moduli[j];
        std::uint32_t s = data_->strides[j];
        out += ((a / s) % n + (b / s) % n) % n * s;
    }
    return out;
}

Element AbelianGroup::neg(Element a) const {
    Element out = 0;
    for (std::size_t j = 0; j < data_->moduli.size(); j++) {
        std::uint32_t n = data_->moduli[j];
        std::uint32_t s = data_->strides[j];
        out += (n - (a / s) % n) % n * s;
    }
    return out;
}

namespace {

std::vector<Element> mask_elements(const BitVector &mask) {
    auto support = mask.support();
    return {support.begin(), support.end()};
}

/// <H, g> as the union of cosets H + i g.
BitVector extend(const AbelianGroup &group, const BitVector &members, Element g) {
    BitVector result = members;
    if (members.get(g)) return result;
    const auto base = mask_elements(members);
    Element x = g;
    while (!members.get(x)) {
        for (Element h : base) {
            result.set(group.add(h, x));
        }
        x = group.add(x, g);
    }
    return result;
}

void require_same_parent(const Subgroup &a, const Subgroup &b, const char *op) {
    if (!(a.parent() == b.parent())) {
        throw DimensionMismatch(std::string(op) + ": subgroups of different groups");
    }
}

struct WordsHash {
    std::size_t operator()(const std::vector<word_t> &words) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto w : words) {
            h ^= std::hash<word_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace

Subgroup::Subgroup(AbelianGroup parent, BitVector members)
    : parent_(std::move(parent)), members_(std::move(members)), size_(static_cast<std::uint32_t>(members_.popcount())) {}

Subgroup detail::make_subgroup_unchecked(const AbelianGroup &g, BitVector members) {
    return Subgroup(g, std::move(members));
}

Subgroup Subgroup::trivial(const AbelianGroup &g) {
    BitVector mask(g.order());
    mask.set(0);
    return Subgroup(g, std::move(mask));
}

Subgroup Subgroup::whole(const AbelianGroup &g) {
    BitVector mask(g.order());
    for (Element e = 0; e < g.order(); e++) mask.set(e);
    return Subgroup(g, std::move(mask));
}

Subgroup Subgroup::from_elements(const AbelianGroup &g, std::span<const Element> elements) {
    BitVector mask(g.order());
    for (Element e : elements) {
        if (e >= g.order()) {
            throw InvariantViolation("element " + std::to_string(e) + " is outside a group of order " +
                                     std::to_string(g.order()));
        }
        mask.set(e);
    }
    return from_mask(g, std::move(mask));
}

Subgroup Subgroup::from_mask(const AbelianGroup &g, BitVector members) {
    if (members.size() != g.order()) {
        throw DimensionMismatch("membership mask of length " + std::to_string(members.size()) +
                                " for a group of order " + std::to_string(g.order()));
    }
    if (!members.get(0)) {
        throw InvariantViolation("subgroup must contain the identity");
    }
    const auto elems = mask_elements(members);
    for (Element a : elems) {
        for (Element b : elems) {
            if (!members.get(g.add(a, b))) {
                throw InvariantViolation("set is not closed: " + std::to_string(a) + " + " + std::to_string(b) +
                                         " is missing");
            }
        }
    }
    return Subgroup(g, std::move(members));
}

bool Subgroup::contains(const Subgroup &other) const {
    require_same_parent(*this, other, "contains");
    return (members_ & other.members_) == other.members_;
}

std::vector<Element> Subgroup::elements() const { return mask_elements(members_); }

Subgroup generated_subgroup(const AbelianGroup &g, std::span<const Element> gens) {
    BitVector mask(g.order());
    mask.set(0);
    for (Element x : gens) {
        if (x >= g.order()) {
            throw PreconditionError("generator " + std::to_string(x) + " is outside a group of order " +
                                    std::to_string(g.order()));
        }
        mask = extend(g, mask, x);
    }
    return detail::make_subgroup_unchecked(g, std::move(mask));
}

Subgroup subgroup_meet(const Subgroup &a, const Subgroup &b) {
    require_same_parent(a, b, "subgroup_meet");
    return detail::make_subgroup_unchecked(a.parent(), a.members() & b.members());
}

Subgroup subgroup_join(const Subgroup &a, const Subgroup &b) {
    require_same_parent(a, b, "subgroup_join");
    BitVector mask = a.members();
    for (Element x : generating_set(b)) {
        mask = extend(a.parent(), mask, x);
    }
    return detail::make_subgroup_unchecked(a.parent(), std::move(mask));
}

std::vector<Element> generating_set(const Subgroup &h) {
    std::vector<Element> gens;
    BitVector current(h.parent().order());
    current.set(0);
    for (Element e : h.elements()) {
        if (!current.get(e)) {
            gens.push_back(e);
            current = extend(h.parent(), current, e);
        }
    }
    return gens;
}

std::vector<Subgroup> all_subgroups(const AbelianGroup &g, std::uint32_t max_order) {
    if (g.order() > max_order) {
        throw BudgetExceeded("all_subgroups: group order " + std::to_string(g.order()), g.order(), max_order);
    }
    // Distinct cyclic subgroups, each kept with one generator.
    std::vector<Element> cyclic_gens;
    {
        std::unordered_set<std::vector<word_t>, WordsHash> seen;
        BitVector trivial(g.order());
        trivial.set(0);
        for (Element e = 1; e < g.order(); e++) {
            auto mask = extend(g, trivial, e);
            std::vector<word_t> key(mask.words().begin(), mask.words().end());
            if (seen.insert(std::move(key)).second) cyclic_gens.push_back(e);
        }
    }

    std::vector<BitVector> found;
    std::unordered_set<std::vector<word_t>, WordsHash> seen;
    BitVector trivial(g.order());
    trivial.set(0);
    found.push_back(trivial);
    seen.insert(std::vector<word_t>(trivial.words().begin(), trivial.words().end()));
    for (std::size_t next = 0; next < found.size(); next++) {
        for (Element x : cyclic_gens) {
            if (found[next].get(x)) continue;
            auto bigger = extend(g, found[next], x);
            std::vector<word_t> key(bigger.words().begin(), bigger.words().end());
            if (seen.insert(std::move(key)).second) found.push_back(std::move(bigger));
        }
    }

    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto &mask : found) {
        out.push_back(detail::make_subgroup_unchecked(g, std::move(mask)));
    }
    std::stable_sort(out.begin(), out.end(), [](const Subgroup &a, const Subgroup &b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elements() < b.elements();
    });
    return out;
}

Subgroup support_subgroup(const AbelianGroup &g, std::span<const std::size_t> factors) {
    std::vector<Element> gens;
    for (auto j : factors) {
        if (j >= g.num_factors()) {
            throw PreconditionError("factor index " + std::to_string(j) + " out of range for " +
                                    std::to_string(g.num_factors()) + " factors");
        }
        gens.push_back(g.generator(j));
    }
    return generated_subgroup(g, gens);
}

Bicharacter Bicharacter::product(const AbelianGroup &g, std::span<const std::uint32_t> multipliers) {
    const std::size_t t = g.num_factors();
    if (multipliers.size() != t) {
        throw DimensionMismatch(std::to_string(multipliers.size()) + " multipliers for " + std::to_string(t) +
                                " factors");
    }
    const std::uint64_t L = g.exponent();
    std::vector<std::uint64_t> matrix(t * t, 0);
    for (std::size_t j = 0; j < t; j++) {
        const std::uint32_t n = g.moduli()[j];
        if (std::gcd(multipliers[j], n) != 1) {
            throw InvariantViolation("multiplier " + std::to_string(multipliers[j]) + " is not coprime to " +
                                     std::to_string(n));
        }
        matrix[j * t + j] = (std::uint64_t{multipliers[j]} % n) * (L / n) % L;
    }
    Bicharacter chi(g, std::move(matrix));
    chi.validate();
    return chi;
}

Bicharacter Bicharacter::from_matrix(const AbelianGroup &g, const std::vector<std::vector<std::int64_t>> &pairing) {
    const std::size_t t = g.num_factors();
    if (pairing.size() != t) {
        throw DimensionMismatch("pairing matrix needs " + std::to_string(t) + " rows");
    }
    const auto L = static_cast<std::int64_t>(g.exponent());
    std::vector<std::uint64_t> matrix(t * t, 0);
    for (std::size_t i = 0; i < t; i++) {
        if (pairing[i].size() != t) {
            throw DimensionMismatch("pairing matrix row " + std::to_string(i) + " needs " + std::to_string(t) +
                                    " entries");
        }
        for (std::size_t j = 0; j < t; j++) {
            matrix[i * t + j] = static_cast<std::uint64_t>(((pairing[i][j] % L) + L) % L);
        }
    }
    Bicharacter chi(g, std::move(matrix));
    chi.validate();
    return chi;
}

std::uint64_t Bicharacter::value(Element a, Element b) const {
    const std::size_t t = group_.num_factors();
    const std::uint64_t L = group_.exponent();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < t; i++) {
        const std::uint64_t ai = group_.component(a, i);
        if (ai == 0) continue;
        for (std::size_t j = 0; j < t; j++) {
            const std::uint64_t p = matrix_[i * t + j];
            if (p == 0) continue;
            acc = (acc + ai * group_.component(b, j) % L * p) % L;
        }
    }
    return acc;
}

BitVector Bicharacter::annihilator_of(Element h) const {
    const std::size_t t = group_.num_factors();
    const std::uint64_t L = group_.exponent();
    // <h, g> = sum_j c_j g_j with c_j = sum_i h_i P_ij.
    std::vector<std::uint64_t> c(t, 0);
    for (std::size_t i = 0; i < t; i++) {
        const std::uint64_t hi = group_.component(h, i);
        for (std::size_t j = 0; j < t; j++) {
            c[j] = (c[j] + hi * matrix_[i * t + j]) % L;
        }
    }
    BitVector out(group_.order());
    for (Element g = 0; g < group_.order(); g++) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < t; j++) {
            acc += c[j] * group_.component(g, j);
        }
        if (acc % L == 0) out.set(g);
    }
    return out;
}

void Bicharacter::validate() const {
    const std::size_t t = group_.num_factors();
    const std::uint64_t L = group_.exponent();
    const auto &n = group_.moduli();
    for (std::size_t i = 0; i < t; i++) {
        for (std::size_t j = 0; j < t; j++) {
            const std::uint64_t p = matrix_[i * t + j];
            if (p * n[i] % L != 0 || p * n[j] % L != 0) {
                throw InvariantViolation("pairing entry (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") does not define a bicharacter on the given cyclic factors");
            }
        }
    }
    // g -> <g, .> is injective iff no nonzero g pairs trivially with every generator.
    for (Element g = 1; g < group_.order(); g++) {
        bool degenerate = true;
        for (std::size_t j = 0; j < t && degenerate; j++) {
            degenerate = is_trivial(g, group_.generator(j));
        }
        if (degenerate) {
            throw InvariantViolation("bicharacter is degenerate: element " + std::to_string(g) +
                                     " pairs trivially with everything");
        }
    }
    bool symmetric = true;
    bool antisymmetric = true;
    for (std::size_t i = 0; i < t; i++) {
        for (std::size_t j = 0; j < t; j++) {
            symmetric = symmetric && matrix_[i * t + j] == matrix_[j * t + i];
            antisymmetric = antisymmetric && (matrix_[i * t + j] + matrix_[j * t + i]) % L == 0;
        }
    }
    if (symmetric || antisymmetric) return;
    const double pairs = double(group_.order()) * double(group_.order());
    if (pairs > double(1u << 24)) {
        throw PreconditionError("cannot verify involutivity of a non-(anti)symmetric pairing on a group of order " +
                                std::to_string(group_.order()));
    }
    for (Element a = 0; a < group_.order(); a++) {
        for (Element b = 0; b < group_.order(); b++) {
            if (is_trivial(a, b) != is_trivial(b, a)) {
                throw InvariantViolation("bicharacter is not involutive");
            }
        }
    }
}

Subgroup dagger(const Subgroup &h, const Bicharacter &chi) {
    if (!(h.parent() == chi.group())) {
        throw DimensionMismatch("dagger: subgroup and bicharacter live on different groups");
    }
    BitVector mask(h.parent().order());
    for (Element g = 0; g < h.parent().order(); g++) mask.set(g);
    for (Element x : generating_set(h)) {
        mask &= chi.annihilator_of(x);
    }
    return detail::make_subgroup_unchecked(h.parent(), std::move(mask));
}

namespace {

struct ClContext {
    Subgroup h_dagger;
    Subgroup b_m;
    Subgroup b_mc;
};

ClContext prepare_cl(const Bicharacter &chi, const Subgroup &h, std::span<const std::size_t> factors) {
    const AbelianGroup &g = chi.group();
    if (!(h.parent() == g)) {
        throw DimensionMismatch("abelian_cl: subgroup and bicharacter live on different groups");
    }
    std::vector<bool> in_m(g.num_factors(), false);
    for (auto j : factors) {
        if (j >= g.num_factors()) {
            throw PreconditionError("factor index " + std::to_string(j + 1) + " out of range for " +
                                    std::to_string(g.num_factors()) + " factors");
        }
        in_m[j] = true;
    }
    std::vector<std::size_t> m, mc;
    for (std::size_t j = 0; j < g.num_factors(); j++) {
        (in_m[j] ? m : mc).push_back(j);
    }
    Subgroup h_dagger = dagger(h, chi);
    if (!h_dagger.contains(h)) {
        throw PreconditionError("abelian_cl: H is not contained in H^dagger");
    }
    Subgroup b_m = support_subgroup(g, m);
    Subgroup b_mc = support_subgroup(g, mc);
    if (!(dagger(b_m, chi) == b_mc)) {
        throw PreconditionError("abelian_cl: the bicharacter does not split over the chosen factors");
    }
    return {std::move(h_dagger), std::move(b_m), std::move(b_mc)};
}

Rational supported_ratio(const Subgroup &b, const Subgroup &h_dagger, const Subgroup &h) {
    return Rational(subgroup_meet(b, h_dagger).size(), subgroup_meet(b, h).size());
}

}  // namespace

AbelianClReport abelian_cl(const Bicharacter &chi, const Subgroup &h, std::span<const std::size_t> factors) {
    auto ctx = prepare_cl(chi, h, factors);
    AbelianClReport report{
        supported_ratio(ctx.b_m, ctx.h_dagger, h),
        supported_ratio(ctx.b_mc, ctx.h_dagger, h),
        Rational(ctx.h_dagger.size(), h.size()),
    };
    QCLEAN_CHECK(report.ell_m * report.ell_mc == report.quotient, "ell_M * ell_{M^c} = |H^dagger / H|");
    return report;
}

AbelianAlternative abelian_cl_alternative(const Bicharacter &chi, const Subgroup &h,
                                          std::span<const std::size_t> factors) {
    auto ctx = prepare_cl(chi, h, factors);
    const AbelianGroup &g = chi.group();
    const Rational ell_m = supported_ratio(ctx.b_m, ctx.h_dagger, h);

    AbelianAlternative out{CleaningOutcome::all_cleanable, std::nullopt, {}};
    for (Element e : ctx.h_dagger.elements()) {
        if (!h.contains(e) && ctx.b_m.contains(e)) {
            out.outcome = CleaningOutcome::nontrivial_supported;
            out.supported_witness = e;
            break;
        }
    }
    QCLEAN_CHECK((out.outcome == CleaningOutcome::nontrivial_supported) == !(ell_m == Rational(1)),
                 "alternative outcome agrees with ell_M");
    if (out.outcome == CleaningOutcome::nontrivial_supported) return out;

    const auto h_elems = h.elements();
    BitVector covered(g.order());
    for (Element e : ctx.h_dagger.elements()) {
        if (covered.get(e)) continue;
        std::optional<Element> witness;
        for (Element x : h_elems) {
            Element y = g.add(e, x);
            covered.set(y);
            if (ctx.b_mc.contains(y) && (!witness || y < *witness)) witness = y;
        }
        QCLEAN_CHECK(witness.has_value(), "every coset of H^dagger/H meets B_{M^c}");
        out.coset_witnesses.push_back(*witness);
    }
    return out;
}

}  // namespace qclean

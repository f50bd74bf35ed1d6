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

#pragma once

// Graded lattices with a quasi-complementation, and the general rank identity
//
//   <eta^dag / xi>_alpha * <xi^dag / eta>_{alpha^dag} = [eta^dag / xi] = [xi^dag / eta]
//
// where [y/x] = |y| |x|^-1 and <y/x>_z = [y z / x z] in the grading group.
// Two instances are provided: subspaces of F2^d graded by dimension (written
// additively in Z) and subgroups of a finite abelian group graded by
// cardinality (written multiplicatively in Q+).

#include <concepts>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <variant>
#include <vector>

#include "qclean/abelian.h"
#include "qclean/subspace.h"

namespace qclean {

template <class L>
concept GradedLattice = requires(const L &lat, const typename L::Element &x, const typename L::Grade &g) {
    { lat.grade(x) } -> std::same_as<typename L::Grade>;
    { lat.meet(x, x) } -> std::same_as<typename L::Element>;
    { lat.join(x, x) } -> std::same_as<typename L::Element>;
    { lat.dagger(x) } -> std::same_as<typename L::Element>;
    { lat.leq(x, x) } -> std::same_as<bool>;
    { lat.check_member(x) };
    { L::combine(g, g) } -> std::same_as<typename L::Grade>;
    { L::ratio(g, g) } -> std::same_as<typename L::Grade>;
};

/// Gr(F2^d) with dim as grading and s -> s^perp under a fixed form.
class GrassmannianLattice {
   public:
    using Element = Subspace;
    using Grade = std::int64_t;

    explicit GrassmannianLattice(BilinearForm form) : form_(form) {}

    const BilinearForm &form() const { return form_; }

    Grade grade(const Subspace &s) const { return static_cast<Grade>(s.dim()); }
    Subspace meet(const Subspace &a, const Subspace &b) const { return intersect(a, b); }
    Subspace join(const Subspace &a, const Subspace &b) const { return sum(a, b); }
    Subspace dagger(const Subspace &s) const { return annihilator(s, form_); }
    bool leq(const Subspace &a, const Subspace &b) const { return b.contains(a); }
    /// Throws DimensionMismatch for a subspace of another ambient space.
    void check_member(const Subspace &s) const;

    static Grade combine(Grade a, Grade b) { return a + b; }
    static Grade ratio(Grade a, Grade b) { return a - b; }

   private:
    BilinearForm form_;
};

/// Subgroups of a finite abelian group with |H| as grading and the bicharacter
/// annihilator as dagger. Per-element annihilators and dagger results are
/// memoized, so one instance should be reused across many queries. Safe for
/// concurrent use.
class SubgroupLattice {
   public:
    using Element = Subgroup;
    using Grade = Rational;

    explicit SubgroupLattice(Bicharacter chi);

    const Bicharacter &bicharacter() const { return chi_; }
    const AbelianGroup &group() const { return chi_.group(); }

    Grade grade(const Subgroup &h) const { return Rational(h.size()); }
    Subgroup meet(const Subgroup &a, const Subgroup &b) const { return subgroup_meet(a, b); }
    Subgroup join(const Subgroup &a, const Subgroup &b) const { return subgroup_join(a, b); }
    Subgroup dagger(const Subgroup &h) const;
    bool leq(const Subgroup &a, const Subgroup &b) const { return b.contains(a); }
    void check_member(const Subgroup &h) const;

    static Grade combine(Grade a, Grade b) { return a * b; }
    static Grade ratio(Grade a, Grade b) { return a / b; }

   private:
    struct Cache;

    Bicharacter chi_;
    std::shared_ptr<Cache> cache_;
};

/// The two built-in instances, for callers that pick one at runtime.
using GradedLatticeInstance = std::variant<GrassmannianLattice, SubgroupLattice>;

enum class LatticeKind { grassmannian, subgroup_lattice };

inline LatticeKind kind(const GradedLatticeInstance &lat) {
    return std::holds_alternative<GrassmannianLattice>(lat) ? LatticeKind::grassmannian
                                                            : LatticeKind::subgroup_lattice;
}

/// All terms of the rank identity for one triple, in the grading group.
template <GradedLattice L>
struct GradedIdentityTerms {
    /// <eta^dag / xi>_alpha
    typename L::Grade a;
    /// <xi^dag / eta>_{alpha^dag}
    typename L::Grade b;
    /// [eta^dag / xi]
    typename L::Grade c;
    /// [xi^dag / eta]
    typename L::Grade c_dual;

    bool holds() const { return L::combine(a, b) == c && c == c_dual; }
};

template <GradedLattice L>
GradedIdentityTerms<L> graded_identity_terms(const L &lat, const typename L::Element &xi,
                                             const typename L::Element &eta, const typename L::Element &alpha) {
    lat.check_member(xi);
    lat.check_member(eta);
    lat.check_member(alpha);
    const auto xi_d = lat.dagger(xi);
    const auto eta_d = lat.dagger(eta);
    const auto alpha_d = lat.dagger(alpha);
    return {
        L::ratio(lat.grade(lat.meet(eta_d, alpha)), lat.grade(lat.meet(xi, alpha))),
        L::ratio(lat.grade(lat.meet(xi_d, alpha_d)), lat.grade(lat.meet(eta, alpha_d))),
        L::ratio(lat.grade(eta_d), lat.grade(xi)),
        L::ratio(lat.grade(xi_d), lat.grade(eta)),
    };
}

/// Holds for every xi, eta, alpha; a false result means a bug. Throws
/// DimensionMismatch if an element does not belong to the lattice.
template <GradedLattice L>
bool verify_graded_identity(const L &lat, const typename L::Element &xi, const typename L::Element &eta,
                            const typename L::Element &alpha) {
    return graded_identity_terms(lat, xi, eta, alpha).holds();
}

bool verify_graded_identity(const GradedLatticeInstance &lat, const std::variant<Subspace, Subgroup> &xi,
                            const std::variant<Subspace, Subgroup> &eta,
                            const std::variant<Subspace, Subgroup> &alpha);

/// |a v b| * |a ^ b| = |a| * |b|.
template <GradedLattice L>
bool verify_grading_law(const L &lat, const typename L::Element &a, const typename L::Element &b) {
    return L::combine(lat.grade(lat.join(a, b)), lat.grade(lat.meet(a, b))) ==
           L::combine(lat.grade(a), lat.grade(b));
}

/// |a| * |a^dag| = |b| * |b^dag|.
template <GradedLattice L>
bool verify_common_product(const L &lat, const typename L::Element &a, const typename L::Element &b) {
    return L::combine(lat.grade(a), lat.grade(lat.dagger(a))) == L::combine(lat.grade(b), lat.grade(lat.dagger(b)));
}

/// Dagger is an order-reversing involution with (a v b)^dag = a^dag ^ b^dag.
template <GradedLattice L>
bool verify_quasi_complementation(const L &lat, const typename L::Element &a, const typename L::Element &b) {
    const auto a_d = lat.dagger(a);
    const auto b_d = lat.dagger(b);
    if (!(lat.dagger(a_d) == a)) return false;
    if (lat.leq(a, b) && !lat.leq(b_d, a_d)) return false;
    return lat.dagger(lat.join(a, b)) == lat.meet(a_d, b_d);
}

}  // namespace qclean

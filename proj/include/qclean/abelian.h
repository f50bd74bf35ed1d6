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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qclean/bitvector.h"
#include "qclean/rational.h"

namespace qclean {

/// Z/n_1 x ... x Z/n_t. Elements are mixed-radix integers in [0, order) with
/// component 0 the least significant digit. Copies share the same data.
class AbelianGroup {
   public:
    using Element = std::uint32_t;
    static constexpr std::uint32_t kMaxOrder = 65536;

    /// Each modulus must be >= 2 and the order at most kMaxOrder.
    explicit AbelianGroup(std::vector<std::uint32_t> moduli);

    const std::vector<std::uint32_t> &moduli() const { return data_->moduli; }
    std::size_t num_factors() const { return data_->moduli.size(); }
    std::uint32_t order() const { return data_->order; }
    /// lcm of the moduli (the exponent of the group).
    std::uint64_t exponent() const { return data_->exponent; }

    Element encode(std::span<const std::uint32_t> coords) const;
    std::vector<std::uint32_t> decode(Element g) const;
    std::uint32_t component(Element g, std::size_t j) const {
        return (g / data_->strides[j]) % data_->moduli[j];
    }

    Element add(Element a, Element b) const;
    Element neg(Element a) const;
    /// Element with 1 in component j and 0 elsewhere.
    Element generator(std::size_t j) const { return data_->strides[j]; }

    bool operator==(const AbelianGroup &other) const { return moduli() == other.moduli(); }

   private:
    struct Data {
        std::vector<std::uint32_t> moduli;
        std::vector<std::uint32_t> strides;
        std::uint32_t order = 1;
        std::uint64_t exponent = 1;
    };
    std::shared_ptr<const Data> data_;
};

/// A subgroup stored as its membership mask over the encoded elements.
class Subgroup;

namespace detail {
/// Wraps a mask already known to be a subgroup (meets, daggers, closures).
Subgroup make_subgroup_unchecked(const AbelianGroup &g, BitVector members);
}  // namespace detail

class Subgroup {
   public:
    using Element = AbelianGroup::Element;

    static Subgroup trivial(const AbelianGroup &g);
    static Subgroup whole(const AbelianGroup &g);
    /// Validates identity membership and closure; throws InvariantViolation.
    static Subgroup from_elements(const AbelianGroup &g, std::span<const Element> elements);
    /// Validates a membership mask the same way.
    static Subgroup from_mask(const AbelianGroup &g, BitVector members);

    const AbelianGroup &parent() const { return parent_; }
    std::uint32_t size() const { return size_; }
    bool contains(Element e) const { return members_.get(e); }
    /// other is a subgroup of this.
    bool contains(const Subgroup &other) const;
    /// Sorted ascending.
    std::vector<Element> elements() const;
    const BitVector &members() const { return members_; }

    bool operator==(const Subgroup &other) const {
        return parent_ == other.parent_ && members_ == other.members_;
    }

   private:
    friend Subgroup detail::make_subgroup_unchecked(const AbelianGroup &g, BitVector members);
    Subgroup(AbelianGroup parent, BitVector members);

    AbelianGroup parent_;
    BitVector members_;
    std::uint32_t size_ = 0;
};

/// Smallest subgroup containing `gens`.
Subgroup generated_subgroup(const AbelianGroup &g, std::span<const Subgroup::Element> gens);
Subgroup subgroup_meet(const Subgroup &a, const Subgroup &b);
Subgroup subgroup_join(const Subgroup &a, const Subgroup &b);
/// A small generating set, found greedily in ascending element order.
std::vector<Subgroup::Element> generating_set(const Subgroup &h);

/// Every subgroup of g, in a deterministic order (trivial subgroup first).
/// Throws BudgetExceeded when g.order() > max_order.
std::vector<Subgroup> all_subgroups(const AbelianGroup &g, std::uint32_t max_order = 256);

/// B_M: elements whose components outside `factors` (0-based) are zero.
Subgroup support_subgroup(const AbelianGroup &g, std::span<const std::size_t> factors);

/// Pairing <a, b> = exp(2 pi i v(a, b) / L), L = exponent of the group, with
/// v(a, b) = sum_{i,j} a_i b_j P_ij mod L computed in exact integer arithmetic.
/// Construction rejects pairings that are ill-defined or degenerate. Non-involutive ones too.
class Bicharacter {
   public:
    using Element = AbelianGroup::Element;

    /// Componentwise <a, b> = exp(2 pi i sum_j a_j b_j m_j / n_j), m_j coprime to n_j.
    static Bicharacter product(const AbelianGroup &g, std::span<const std::uint32_t> multipliers);
    /// Explicit t x t matrix of numerators over L (e.g. antisymmetric forms).
    static Bicharacter from_matrix(const AbelianGroup &g, const std::vector<std::vector<std::int64_t>> &pairing);

    const AbelianGroup &group() const { return group_; }
    /// Numerator of the phase, in [0, L).
    std::uint64_t value(Element a, Element b) const;
    bool is_trivial(Element a, Element b) const { return value(a, b) == 0; }
    /// {g : <h, g> = 1} as a membership mask.
    BitVector annihilator_of(Element h) const;

    bool operator==(const Bicharacter &other) const = default;

   private:
    Bicharacter(AbelianGroup g, std::vector<std::uint64_t> matrix) : group_(std::move(g)), matrix_(std::move(matrix)) {}
    void validate() const;

    AbelianGroup group_;
    std::vector<std::uint64_t> matrix_;  // row-major t x t, entries mod L
};

/// H^dagger = {g : <h, g> = 1 for all h in H}, evaluated on a generating set of H.
Subgroup dagger(const Subgroup &h, const Bicharacter &chi);

struct AbelianClReport {
    Rational ell_m;
    Rational ell_mc;
    /// |H^dagger / H|.
    Rational quotient;
};

/// Requires H inside H^dagger and a pairing that splits over the factor set:
/// (B_M)^dagger = B_{M^c}. Returns ell_M = |B_M n H^dagger| / |B_M n H| and the
/// complementary value, checking ell_M * ell_{M^c} = |H^dagger / H|.
AbelianClReport abelian_cl(const Bicharacter &chi, const Subgroup &h, std::span<const std::size_t> factors);

enum class CleaningOutcome { nontrivial_supported, all_cleanable };

struct AbelianAlternative {
    CleaningOutcome outcome;
    /// For nontrivial_supported: the smallest element of (H^dagger \ H) n B_M.
    std::optional<Subgroup::Element> supported_witness;
    /// For all_cleanable: one representative in B_{M^c} for each coset of
    /// H^dagger / H, listed in order of each coset's smallest element.
    std::vector<Subgroup::Element> coset_witnesses;
};

AbelianAlternative abelian_cl_alternative(const Bicharacter &chi, const Subgroup &h,
                                          std::span<const std::size_t> factors);

}  // namespace qclean

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

#include "qclean/graded_lattice.h"

#include <shared_mutex>

#include "qclean/errors.h"

namespace qclean {

void GrassmannianLattice::check_member(const Subspace &s) const {
    if (s.ambient_dim() != form_.ambient_dim()) {
        throw DimensionMismatch("subspace of F2^" + std::to_string(s.ambient_dim()) +
                                " is not an element of Gr(F2^" + std::to_string(form_.ambient_dim()) + ")");
    }
}

namespace {

struct MaskHash {
    std::size_t operator()(const BitVector &v) const {
        std::size_t h = 0x84222325cbf29ce4ull;
        for (auto w : v.words()) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }
};

// Above this order the per-element annihilator table would cost too much memory.
constexpr std::uint32_t kAnnihilatorTableCap = 4096;

}  // namespace

struct SubgroupLattice::Cache {
    std::vector<BitVector> annihilators;  // empty when the group is too large
    std::shared_mutex mutex;
    std::unordered_map<BitVector, BitVector, MaskHash> daggers;
};

SubgroupLattice::SubgroupLattice(Bicharacter chi) : chi_(std::move(chi)), cache_(std::make_shared<Cache>()) {
    const auto order = chi_.group().order();
    if (order <= kAnnihilatorTableCap) {
        cache_->annihilators.reserve(order);
        for (AbelianGroup::Element g = 0; g < order; g++) {
            cache_->annihilators.push_back(chi_.annihilator_of(g));
        }
    }
}

void SubgroupLattice::check_member(const Subgroup &h) const {
    if (!(h.parent() == chi_.group())) {
        throw DimensionMismatch("subgroup belongs to a different group than the lattice");
    }
}

Subgroup SubgroupLattice::dagger(const Subgroup &h) const {
    check_member(h);
    if (cache_->annihilators.empty()) return qclean::dagger(h, chi_);
    {
        std::shared_lock lock(cache_->mutex);
        auto it = cache_->daggers.find(h.members());
        if (it != cache_->daggers.end()) return detail::make_subgroup_unchecked(group(), it->second);
    }
    BitVector mask(group().order());
    for (AbelianGroup::Element g = 0; g < group().order(); g++) mask.set(g);
    for (auto x : generating_set(h)) mask &= cache_->annihilators[x];
    auto result = detail::make_subgroup_unchecked(group(), mask);
    std::unique_lock lock(cache_->mutex);
    cache_->daggers.emplace(h.members(), std::move(mask));
    return result;
}

bool verify_graded_identity(const GradedLatticeInstance &lat, const std::variant<Subspace, Subgroup> &xi,
                            const std::variant<Subspace, Subgroup> &eta,
                            const std::variant<Subspace, Subgroup> &alpha) {
    return std::visit(
        [&](const auto &l) -> bool {
            using E = typename std::decay_t<decltype(l)>::Element;
            if (!std::holds_alternative<E>(xi) || !std::holds_alternative<E>(eta) ||
                !std::holds_alternative<E>(alpha)) {
                throw DimensionMismatch("element kind does not match the lattice kind");
            }
            return verify_graded_identity(l, std::get<E>(xi), std::get<E>(eta), std::get<E>(alpha));
        },
        lat);
}

}  // namespace qclean

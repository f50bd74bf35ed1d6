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

// Brute-force reference computations. Nothing here uses echelon forms or any
// other routine of the fast paths: subspaces are handled as explicit sets of
// vectors, so agreement with the library is independent evidence.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_set>

#include "qclean/abelian.h"
#include "qclean/bitmatrix.h"
#include "qclean/codes.h"

namespace qclean::oracle {

/// Largest ambient dimension the enumerators accept.
inline constexpr std::size_t kMaxEnumDim = 20;

/// log2 of the number of v in F2^d with pred(v). Spot-checks closure under
/// addition on the satisfying set and throws InvariantViolation if the count
/// is not a power of two or closure fails. Requires d <= kMaxEnumDim.
std::size_t enum_subspace_dim(std::size_t d, const std::function<bool(const BitVector &)> &pred);

/// Every element of the span of `rows`, as a set of packed words (d <= 64).
/// Built by adding each generator to everything found so far.
class SpanSet {
   public:
    explicit SpanSet(const BitMatrix &rows);
    bool contains(const BitVector &v) const;
    bool contains(std::uint64_t packed) const { return set_.count(packed) != 0; }
    std::size_t size() const { return set_.size(); }
    const std::unordered_set<std::uint64_t> &elements() const { return set_; }

   private:
    std::unordered_set<std::uint64_t> set_;
};

std::uint64_t pack(const BitVector &v);

/// Commutes with every row of `generators` under the symplectic form.
bool commutes_with_all(const BitVector &v, const BitMatrix &generators);

/// l_M by counting {v in S^perp : supp v in M} and S n alpha. 2n <= kMaxEnumDim.
std::size_t stab_ell(const StabilizerCode &c, const Region &m);
/// Counted over F2^n with explicit membership tests. n <= kMaxEnumDim.
CssElls css_ells(const CssCode &c, const Region &m);
/// g(M) = |S^perp n alpha| - |(S^perp n alpha) n G| and
/// g_bare(M^c) = |G^perp n alpha^perp| - |G^perp n alpha^perp n S| in log2
/// counts. 2n <= kMaxEnumDim.
SubsystemGs subsystem_gs(const SubsystemCode &c, const Region &m);

/// Minimum qubit weight over S^perp \ S by enumerating all of F2^2n;
/// nullopt when k = 0. Throws BudgetExceeded for 2n > 24.
std::optional<std::size_t> brute_distance(const StabilizerCode &c);

/// Tests every g against every h. Throws BudgetExceeded for |G| > 4096.
Subgroup subgroup_dagger_brute(const Subgroup &h, const Bicharacter &chi);

}  // namespace qclean::oracle

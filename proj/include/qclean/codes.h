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

// Stabilizer, CSS and subsystem codes in the binary symplectic picture.
//
// A Pauli operator on n qubits is a vector (x_1..x_n | z_1..z_n) of F2^2n.
// Regions are sets of qubits, stored 0-based; the CLI speaks 1-based.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qclean/bitmatrix.h"
#include "qclean/subspace.h"

namespace qclean {

/// Enumeration budget in elementary steps. QCLEAN_BUDGET overrides the
/// default of 2^26 when set to a positive integer.
std::uint64_t default_budget();

class Region {
   public:
    Region() = default;
    /// Qubits are 0-based; throws InvariantViolation on duplicates or
    /// out-of-range indices. Order of the input does not matter.
    Region(std::size_t n, std::vector<std::size_t> qubits);
    static Region from_one_based(std::size_t n, std::span<const std::size_t> qubits);
    /// Bit i of `mask` selects qubit i. Requires n <= 64.
    static Region from_mask(std::size_t n, std::uint64_t mask);
    static Region all(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t size() const { return qubits_.size(); }
    const std::vector<std::size_t> &qubits() const { return qubits_; }
    bool contains(std::size_t q) const;
    Region complement() const;
    std::vector<std::size_t> one_based() const;

    bool operator==(const Region &other) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<std::size_t> qubits_;
};

enum class RegionLayout { symplectic_2n, plain_n };

/// Operators supported on the region. The complement region maps to the
/// annihilator under the symplectic (resp. dot) form.
Subspace region_subspace(const Region &r, RegionLayout layout);

/// Number of qubits on which v = (x | z) acts nontrivially.
std::size_t qubit_weight(const BitVector &v);

class StabilizerCode {
   public:
    /// S must be an isotropic subspace of symplectic F2^2n. Its canonical
    /// basis serves as the generator list.
    StabilizerCode(std::size_t n, Subspace stabilizer);
    /// Row span of 2n-column generators, which are kept as given (redundant
    /// rows allowed) for cleaning and serialization.
    static StabilizerCode from_generators(std::size_t n, const BitMatrix &generators);

    std::size_t n() const { return n_; }
    std::size_t k() const { return n_ - s_.dim(); }
    const Subspace &stabilizer() const { return s_; }
    const Subspace &centralizer() const { return s_perp_; }
    const BitMatrix &generators() const { return generators_; }
    BilinearForm form() const { return BilinearForm::symplectic(2 * n_); }

   private:
    std::size_t n_;
    BitMatrix generators_;
    Subspace s_;
    Subspace s_perp_;
};

/// l_M = dim(S^perp n alpha) - dim(S n alpha), the number of independent
/// logical classes with a representative supported on M.
std::size_t stab_ell(const StabilizerCode &c, const Region &m);
/// l_M + l_{M^c} == 2k.
bool verify_stab_cl(const StabilizerCode &c, const Region &m);
bool is_correctable(const StabilizerCode &c, const Region &m);

/// For v in S^perp returns v + s, s in S, vanishing on every qubit of M. The
/// stabilizer shift is the lex-min solution over the coefficients of the
/// code's generators. nullopt when no shift clears M for this v. Throws
/// PreconditionError if v is not in S^perp.
std::optional<BitVector> clean(const StabilizerCode &c, const Region &m, const BitVector &v);

/// Minimum qubit weight of S^perp \ S, searched up to max_weight. nullopt if
/// nothing is found within the bound (always the case for k = 0). Enumerates
/// S^perp when dim S^perp <= 22 and 2^dim fits the budget, otherwise Pauli
/// operators by increasing weight; throws BudgetExceeded if the latter would
/// pass the budget before finding an answer.
std::optional<std::size_t> distance_brute(const StabilizerCode &c, std::size_t max_weight,
                                          std::uint64_t budget = default_budget());
inline std::optional<std::size_t> distance_brute(const StabilizerCode &c) { return distance_brute(c, c.n()); }

/// True iff every region of exactly w qubits is correctable, i.e. d > w.
/// Throws BudgetExceeded when C(n, w) > budget.
bool distance_certify_lb(const StabilizerCode &c, std::size_t w, std::uint64_t budget = default_budget(),
                         unsigned threads = 1);

class CssCode {
   public:
    /// Throws InvariantViolation naming the first row pair with a nonzero
    /// entry of H_x H_z^T, or DimensionMismatch for column counts.
    CssCode(BitMatrix hx, BitMatrix hz);

    std::size_t n() const { return hx_.cols(); }
    std::size_t k() const { return n() - xi_.dim() - eta_.dim(); }
    const BitMatrix &hx() const { return hx_; }
    const BitMatrix &hz() const { return hz_; }
    /// Row space of H_x.
    const Subspace &xi() const { return xi_; }
    /// Row space of H_z.
    const Subspace &eta() const { return eta_; }
    /// ker H_x = xi^perp.
    const Subspace &ker_hx() const { return ker_hx_; }
    /// ker H_z = eta^perp.
    const Subspace &ker_hz() const { return ker_hz_; }

   private:
    BitMatrix hx_, hz_;
    Subspace xi_, eta_, ker_hx_, ker_hz_;
};

struct CssElls {
    std::size_t ell_x = 0;
    std::size_t ell_z = 0;
    std::size_t ell_x_prime = 0;
    std::size_t ell_z_prime = 0;
};

/// l_x = dim(ker H_z n alpha) - dim(xi n alpha), l_z = dim(ker H_x n alpha) -
/// dim(eta n alpha); the primed values use alpha^perp. Checks
/// l_x + l_z' = l_z + l_x' = k.
CssElls css_ells(const CssCode &c, const Region &m);
/// Same for an arbitrary alpha inside F2^n with the dot product.
CssElls css_ells(const CssCode &c, const Subspace &alpha);

/// S = xi (+) eta: H_x rows become X-type, H_z rows Z-type generators.
StabilizerCode css_to_stabilizer(const CssCode &c);

class SubsystemCode {
   public:
    /// G is any subspace of symplectic F2^2n.
    SubsystemCode(std::size_t n, Subspace gauge);
    static SubsystemCode from_generators(std::size_t n, const BitMatrix &generators);

    std::size_t n() const { return n_; }
    const BitMatrix &generators() const { return generators_; }
    std::size_t k() const { return k_; }
    std::size_t g() const { return g_; }
    const Subspace &gauge() const { return gauge_; }
    const Subspace &gauge_perp() const { return gauge_perp_; }
    /// S = G n G^perp.
    const Subspace &stabilizer() const { return s_; }
    const Subspace &stabilizer_perp() const { return s_perp_; }

   private:
    std::size_t n_, k_ = 0, g_ = 0;
    BitMatrix generators_;
    Subspace gauge_, gauge_perp_, s_, s_perp_;
};

struct SubsystemGs {
    /// dim((S^perp n alpha + G) / G): dressed logicals on M.
    std::size_t g_dressed_m = 0;
    /// dim((G^perp n alpha^perp + S) / S): bare logicals on M^c.
    std::size_t g_bare_mc = 0;
};

/// Checks g(M) + g_bare(M^c) = 2k.
SubsystemGs subsystem_gs(const SubsystemCode &c, const Region &m);

/// {(x, x)} inside F2^n for even n: the simplest alpha with alpha = alpha^perp.
Subspace universal_subspace(std::size_t n);

struct UniversalLogops {
    std::size_t ell_x = 0;
    std::size_t ell_z = 0;
    /// Rows in alpha n ker H_z, independent modulo xi.
    BitMatrix x_reps;
    /// Rows in alpha n ker H_x, independent modulo eta.
    BitMatrix z_reps;
};

/// Requires alpha = alpha^perp under the dot product (PreconditionError
/// otherwise). Then l_x + l_z = k.
UniversalLogops universal_logops(const CssCode &c, const Subspace &alpha);

enum class TripartitionStatus { verified, hypothesis_failed };

struct TripartitionResult {
    TripartitionStatus status;
    /// Which hypothesis failed; empty when verified.
    std::string failed_hypothesis;
    std::size_t two_k = 0;
    std::size_t two_c = 0;
};

/// With A, B correctable and A, B, C a partition of the qubits, 2k <= 2|C|.
/// Throws PreconditionError unless the regions partition [n].
TripartitionResult tripartition_bound(const StabilizerCode &c, const Region &a, const Region &b,
                                      const Region &g);

}  // namespace qclean

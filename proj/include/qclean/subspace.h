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
#include <span>
#include <vector>

#include "qclean/bitmatrix.h"

namespace qclean {

enum class FormKind { euclidean_dot, symplectic };

/// A nondegenerate bilinear form on F2^d. The symplectic form uses the
/// (x_1..x_n | z_1..z_n) layout: <(x|z), (x'|z')> = x.z' + z.x'.
class BilinearForm {
   public:
    static BilinearForm euclidean(std::size_t dim) { return BilinearForm(FormKind::euclidean_dot, dim); }
    /// `dim` is the full ambient dimension 2n and must be even.
    static BilinearForm symplectic(std::size_t dim);

    FormKind kind() const { return kind_; }
    std::size_t ambient_dim() const { return dim_; }

    bool pair(const BitVector &a, const BitVector &b) const;
    /// The Gram matrix applied to v, so that pair(a, b) == dot(dual(a), b).
    BitVector dual(const BitVector &v) const;
    BitMatrix dual_rows(const BitMatrix &rows) const;

    bool operator==(const BilinearForm &other) const = default;

   private:
    BilinearForm(FormKind kind, std::size_t dim) : kind_(kind), dim_(dim) {}

    FormKind kind_;
    std::size_t dim_;
};

/// A subspace of F2^d, stored as its reduced row echelon basis. Equal
/// subspaces have bitwise-equal representations.
class Subspace {
   public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    /// Row space of `rows`.
    static Subspace span(const BitMatrix &rows);
    static Subspace span(std::span<const BitVector> vectors, std::size_t ambient_dim);

    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const BitMatrix &basis() const { return basis_; }
    const std::vector<std::size_t> &pivots() const { return pivots_; }

    /// v with every pivot coordinate cleared by adding basis rows: a canonical
    /// representative of v + (this subspace).
    BitVector reduce(const BitVector &v) const;
    bool contains(const BitVector &v) const;
    /// other is a subspace of this.
    bool contains(const Subspace &other) const;

    bool operator==(const Subspace &other) const { return basis_ == other.basis_; }

   private:
    Subspace(BitMatrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    BitMatrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace &a, const Subspace &b);
/// Kernel method: solves c_a A + c_b B = 0 over the stacked bases and maps the
/// solutions back through A.
Subspace intersect(const Subspace &a, const Subspace &b);
Subspace annihilator(const Subspace &s, const BilinearForm &f);
/// Subspace of F2^(a+b) consisting of (u | v) with u in a, v in b.
Subspace direct_sum(const Subspace &a, const Subspace &b);

/// dim big - dim small; throws PreconditionError unless small is inside big.
std::size_t quotient_dim(const Subspace &big, const Subspace &small);

/// rho(a, b) = dim a - dim(a n b).
std::size_t rho(const Subspace &a, const Subspace &b);

/// dim((u n w + v) / v) for v inside u, evaluated as dim(u n w) - dim(v n w)
/// (modular law); no quotient space is built.
std::size_t restricted_quotient_dim(const Subspace &u, const Subspace &v, const Subspace &w);

bool is_isotropic(const Subspace &s, const BilinearForm &f);
bool is_lagrangian(const Subspace &s, const BilinearForm &f);
/// s and t pair to zero under f, i.e. s is inside t^perp.
bool are_orthogonal(const Subspace &s, const Subspace &t, const BilinearForm &f);

/// sigma + (sigma^perp n beta). Requires sigma isotropic.
Subspace h_sigma(const Subspace &sigma, const Subspace &beta, const BilinearForm &f);

/// Whether the induced map into sigma^perp / sigma commutes with taking
/// orthogonal complements, checked as h_sigma(beta)^perp == h_sigma(beta^perp).
bool q_sigma_duality_check(const Subspace &sigma, const Subspace &beta, const BilinearForm &f);

/// zeta (+) zeta^perp inside symplectic F2^(2n), for zeta in F2^n with the
/// dot product. Always Lagrangian.
Subspace lagrangian_of(const Subspace &zeta);

/// Dot-product setting with xi inside eta^perp. Builds
///   alpha_1 = eta^perp n alpha + xi,    alpha_2 = xi^perp n alpha^perp + eta
/// and checks that alpha_2 / eta is the annihilator of alpha_1 / xi inside the
/// pairing of xi^perp/eta with eta^perp/xi: every generator pair couples to 0
/// and (dim alpha_1 - dim xi) + (dim alpha_2 - dim eta) = dim eta^perp - dim xi.
bool verify_factor_annihilator(const Subspace &xi, const Subspace &eta, const Subspace &alpha);

/// For xi orthogonal to eta under f:
///   dim((eta^perp n alpha + xi)/xi) + dim((xi^perp n alpha^perp + eta)/eta) = n - dim eta - dim xi.
bool verify_orthospace_identity(const Subspace &xi, const Subspace &eta, const Subspace &alpha,
                                const BilinearForm &f);

}  // namespace qclean

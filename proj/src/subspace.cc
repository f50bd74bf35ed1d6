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

#include "qclean/subspace.h"

#include "qclean/errors.h"
#include "qclean/linalg.h"

namespace qclean {

namespace {

void require_ambient(const Subspace &a, const Subspace &b, const char *op) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw DimensionMismatch(std::string(op) + ": ambient dimensions " + std::to_string(a.ambient_dim()) +
                                " and " + std::to_string(b.ambient_dim()) + " differ");
    }
}

void require_form(const Subspace &s, const BilinearForm &f, const char *op) {
    if (s.ambient_dim() != f.ambient_dim()) {
        throw DimensionMismatch(std::string(op) + ": subspace of F2^" + std::to_string(s.ambient_dim()) +
                                " with a form on F2^" + std::to_string(f.ambient_dim()));
    }
}

void require_isotropic(const Subspace &sigma, const BilinearForm &f, const char *op) {
    if (!is_isotropic(sigma, f)) {
        throw PreconditionError(std::string(op) + ": sigma is not isotropic");
    }
}

}  // namespace

BilinearForm BilinearForm::symplectic(std::size_t dim) {
    if (dim % 2 != 0) {
        throw PreconditionError("symplectic form needs an even ambient dimension, got " + std::to_string(dim));
    }
    return BilinearForm(FormKind::symplectic, dim);
}

BitVector BilinearForm::dual(const BitVector &v) const {
    if (v.size() != dim_) {
        throw DimensionMismatch("form on F2^" + std::to_string(dim_) + " applied to a vector of length " +
                                std::to_string(v.size()));
    }
    if (kind_ == FormKind::euclidean_dot) return v;
    const std::size_t n = dim_ / 2;
    return BitVector::concat(v.slice(n, n), v.slice(0, n));
}

BitMatrix BilinearForm::dual_rows(const BitMatrix &rows) const {
    if (kind_ == FormKind::euclidean_dot) {
        if (rows.cols() != dim_) {
            throw DimensionMismatch("form on F2^" + std::to_string(dim_) + " applied to rows of length " +
                                    std::to_string(rows.cols()));
        }
        return rows;
    }
    BitMatrix out(rows.rows(), rows.cols());
    for (std::size_t r = 0; r < rows.rows(); r++) {
        out.set_row(r, dual(rows.row(r)));
    }
    return out;
}

bool BilinearForm::pair(const BitVector &a, const BitVector &b) const { return dot(dual(a), b); }

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(BitMatrix(0, ambient_dim), {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<std::size_t> pivots(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; i++) pivots[i] = i;
    return Subspace(BitMatrix::identity(ambient_dim), std::move(pivots));
}

Subspace Subspace::span(const BitMatrix &rows) {
    auto echelon = rref(rows);
    return Subspace(std::move(echelon.basis), std::move(echelon.pivots));
}

Subspace Subspace::span(std::span<const BitVector> vectors, std::size_t ambient_dim) {
    return span(BitMatrix::from_rows(vectors, ambient_dim));
}

BitVector Subspace::reduce(const BitVector &v) const {
    if (v.size() != ambient_dim()) {
        throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " against a subspace of F2^" +
                                std::to_string(ambient_dim()));
    }
    BitVector out = v;
    const auto &k = kernels::active();
    for (std::size_t i = 0; i < pivots_.size(); i++) {
        if (out.get(pivots_[i])) {
            k.xor_into(out.words().data(), basis_.row_words(i).data(), out.num_words());
        }
    }
    return out;
}

bool Subspace::contains(const BitVector &v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace &other) const {
    require_ambient(*this, other, "contains");
    if (other.dim() > dim()) return false;
    for (std::size_t r = 0; r < other.dim(); r++) {
        if (!contains(other.basis().row(r))) return false;
    }
    return true;
}

Subspace sum(const Subspace &a, const Subspace &b) {
    require_ambient(a, b, "sum");
    return Subspace::span(BitMatrix::vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace &a, const Subspace &b) {
    require_ambient(a, b, "intersect");
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
    // Columns of the transpose are the basis vectors of a then b; a kernel
    // vector (c_a | c_b) gives c_a A = c_b B, an element of the intersection.
    BitMatrix stacked = BitMatrix::vstack(a.basis(), b.basis()).transposed();
    BitMatrix coeffs = kernel_basis(stacked);
    std::vector<std::size_t> a_cols(a.dim());
    for (std::size_t i = 0; i < a_cols.size(); i++) a_cols[i] = i;
    return Subspace::span(coeffs.select_columns(a_cols) * a.basis());
}

Subspace annihilator(const Subspace &s, const BilinearForm &f) {
    require_form(s, f, "annihilator");
    return Subspace::span(kernel_basis(f.dual_rows(s.basis())));
}

Subspace direct_sum(const Subspace &a, const Subspace &b) {
    const std::size_t da = a.ambient_dim();
    const std::size_t db = b.ambient_dim();
    BitMatrix rows(a.dim() + b.dim(), da + db);
    for (std::size_t r = 0; r < a.dim(); r++) {
        rows.set_row(r, BitVector::concat(a.basis().row(r), BitVector(db)));
    }
    for (std::size_t r = 0; r < b.dim(); r++) {
        rows.set_row(a.dim() + r, BitVector::concat(BitVector(da), b.basis().row(r)));
    }
    return Subspace::span(rows);
}

std::size_t quotient_dim(const Subspace &big, const Subspace &small) {
    require_ambient(big, small, "quotient_dim");
    if (!big.contains(small)) {
        throw PreconditionError("quotient_dim: the divisor is not a subspace of the dividend");
    }
    return big.dim() - small.dim();
}

std::size_t rho(const Subspace &a, const Subspace &b) {
    require_ambient(a, b, "rho");
    return a.dim() - intersect(a, b).dim();
}

std::size_t restricted_quotient_dim(const Subspace &u, const Subspace &v, const Subspace &w) {
    require_ambient(u, v, "restricted_quotient_dim");
    require_ambient(u, w, "restricted_quotient_dim");
    if (!u.contains(v)) {
        throw PreconditionError("restricted_quotient_dim: v must be a subspace of u");
    }
    return intersect(u, w).dim() - intersect(v, w).dim();
}

bool is_isotropic(const Subspace &s, const BilinearForm &f) {
    require_form(s, f, "is_isotropic");
    return are_orthogonal(s, s, f);
}

bool is_lagrangian(const Subspace &s, const BilinearForm &f) {
    return is_isotropic(s, f) && 2 * s.dim() == f.ambient_dim();
}

bool are_orthogonal(const Subspace &s, const Subspace &t, const BilinearForm &f) {
    require_form(s, f, "are_orthogonal");
    require_form(t, f, "are_orthogonal");
    BitMatrix duals = f.dual_rows(s.basis());
    for (std::size_t i = 0; i < duals.rows(); i++) {
        for (std::size_t j = 0; j < t.dim(); j++) {
            if (kernels::active().dot_parity(duals.row_words(i).data(), t.basis().row_words(j).data(),
                                             duals.stride())) {
                return false;
            }
        }
    }
    return true;
}

Subspace h_sigma(const Subspace &sigma, const Subspace &beta, const BilinearForm &f) {
    require_ambient(sigma, beta, "h_sigma");
    require_isotropic(sigma, f, "h_sigma");
    return sum(sigma, intersect(annihilator(sigma, f), beta));
}

bool q_sigma_duality_check(const Subspace &sigma, const Subspace &beta, const BilinearForm &f) {
    require_ambient(sigma, beta, "q_sigma_duality_check");
    require_isotropic(sigma, f, "q_sigma_duality_check");
    return annihilator(h_sigma(sigma, beta, f), f) == h_sigma(sigma, annihilator(beta, f), f);
}

Subspace lagrangian_of(const Subspace &zeta) {
    return direct_sum(zeta, annihilator(zeta, BilinearForm::euclidean(zeta.ambient_dim())));
}

bool verify_factor_annihilator(const Subspace &xi, const Subspace &eta, const Subspace &alpha) {
    require_ambient(xi, eta, "verify_factor_annihilator");
    require_ambient(xi, alpha, "verify_factor_annihilator");
    const auto dotf = BilinearForm::euclidean(xi.ambient_dim());
    if (!are_orthogonal(xi, eta, dotf)) {
        throw PreconditionError("verify_factor_annihilator: xi is not orthogonal to eta");
    }
    const Subspace xi_perp = annihilator(xi, dotf);
    const Subspace eta_perp = annihilator(eta, dotf);
    const Subspace alpha1 = sum(intersect(eta_perp, alpha), xi);
    const Subspace alpha2 = sum(intersect(xi_perp, annihilator(alpha, dotf)), eta);

    if (!are_orthogonal(alpha1, alpha2, dotf)) return false;
    return (alpha1.dim() - xi.dim()) + (alpha2.dim() - eta.dim()) == eta_perp.dim() - xi.dim();
}

bool verify_orthospace_identity(const Subspace &xi, const Subspace &eta, const Subspace &alpha,
                                const BilinearForm &f) {
    require_form(xi, f, "verify_orthospace_identity");
    require_form(eta, f, "verify_orthospace_identity");
    require_form(alpha, f, "verify_orthospace_identity");
    if (!are_orthogonal(xi, eta, f)) {
        throw PreconditionError("verify_orthospace_identity: xi is not orthogonal to eta");
    }
    const Subspace xi_perp = annihilator(xi, f);
    const Subspace eta_perp = annihilator(eta, f);
    const Subspace alpha_perp = annihilator(alpha, f);
    const std::size_t lhs =
        restricted_quotient_dim(eta_perp, xi, alpha) + restricted_quotient_dim(xi_perp, eta, alpha_perp);
    return lhs + eta.dim() + xi.dim() == f.ambient_dim();
}

}  // namespace qclean

// Copyright 2026 The wyskew Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "hermitian.hpp"

namespace wyskew {

/**
 * Wigner-Yanase skew information I_rho(H) = -1/2 Tr([sqrt(rho), H]^2).
 *
 * Evaluated as 1/2 ||[sqrt(rho), H]||_F^2, which equals the trace form
 * Tr(rho H^2) - Tr(sqrt(rho) H sqrt(rho) H) and is nonnegative by
 * construction.
 */
inline double skew_information(const DensityMatrix &rho,
                               const HermitianOperator &h) {
    detail::require_same_dim(rho.dim(), h.dim(), "skew_information");
    const double n = frobenius_norm(commutator(rho.sqrt().matrix(), h.matrix()));
    return 0.5 * n * n;
}

/// Tr(rho H^2) - Tr(rho H)^2, clamped at zero.
inline double variance(const DensityMatrix &rho, const HermitianOperator &h) {
    detail::require_same_dim(rho.dim(), h.dim(), "variance");
    const ComplexMatrix rh = rho.matrix() * h.matrix();
    const double mean = rh.trace().real();
    const double second = (rh * h.matrix()).trace().real();
    return std::max(0.0, second - mean * mean);
}

/**
 * An ordered Hilbert-Schmidt orthonormal basis of the n^2-dimensional real
 * space of Hermitian n x n matrices: Tr(H_i H_j) = delta_ij.
 */
class ObservableBasis {
  public:
    static constexpr double kOrthonormalTol = 1e-10;

    explicit ObservableBasis(std::vector<HermitianOperator> operators)
        : operators_(std::move(operators)) {
        if (operators_.empty()) {
            throw ValidationError("ObservableBasis: no operators");
        }
        dim_ = operators_.front().dim();
        const auto expected = static_cast<std::size_t>(dim_) * dim_;
        if (operators_.size() != expected) {
            throw ValidationError("ObservableBasis: expected " +
                                  std::to_string(expected) +
                                  " operators for dimension " +
                                  std::to_string(dim_) + ", got " +
                                  std::to_string(operators_.size()));
        }
        for (const auto &op : operators_) {
            detail::require_same_dim(op.dim(), dim_, "ObservableBasis");
        }
        for (std::size_t i = 0; i < operators_.size(); ++i) {
            for (std::size_t j = i; j < operators_.size(); ++j) {
                const Complex g =
                    (operators_[i].matrix() * operators_[j].matrix()).trace();
                const double target = i == j ? 1.0 : 0.0;
                if (std::abs(g - target) > kOrthonormalTol) {
                    throw ValidationError(
                        "ObservableBasis: operators " + std::to_string(i) +
                        " and " + std::to_string(j) +
                        " violate Hilbert-Schmidt orthonormality");
                }
            }
        }
    }

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t size() const noexcept {
        return operators_.size();
    }
    [[nodiscard]] const std::vector<HermitianOperator> &operators() const {
        return operators_;
    }
    [[nodiscard]] const HermitianOperator &operator[](std::size_t i) const {
        return operators_[i];
    }

    /// The basis {U H_i U^dagger}; orthonormal whenever U is unitary.
    [[nodiscard]] ObservableBasis conjugated(const ComplexMatrix &u) const {
        detail::require_same_dim(u.rows(), dim_, "ObservableBasis::conjugated");
        std::vector<HermitianOperator> rotated;
        rotated.reserve(operators_.size());
        for (const auto &op : operators_) {
            rotated.emplace_back(ComplexMatrix(u * op.matrix() * u.adjoint()));
        }
        return ObservableBasis(std::move(rotated));
    }

  private:
    std::vector<HermitianOperator> operators_;
    int dim_ = 0;
};

/**
 * Generalized Gell-Mann basis normalized to unit Hilbert-Schmidt norm.
 *
 * Order: I/sqrt(n); then for each pair j < k the symmetric
 * (E_jk + E_kj)/sqrt(2) followed by the antisymmetric
 * (-i E_jk + i E_kj)/sqrt(2); then the n - 1 traceless diagonals. For n = 2
 * this is {I, sigma_1, sigma_2, sigma_3} / sqrt(2).
 */
inline ObservableBasis gell_mann_basis(int n) {
    if (n < 2 || n > kMaxDim) {
        throw ValidationError("gell_mann_basis: dimension " +
                              std::to_string(n) + " outside [2, " +
                              std::to_string(kMaxDim) + "]");
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<HermitianOperator> ops;
    ops.reserve(static_cast<std::size_t>(n) * n);
    ops.emplace_back(ComplexMatrix(ComplexMatrix::Identity(n, n) /
                                   std::sqrt(static_cast<double>(n))));
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            ComplexMatrix sym = ComplexMatrix::Zero(n, n);
            sym(j, k) = inv_sqrt2;
            sym(k, j) = inv_sqrt2;
            ops.emplace_back(sym);

            ComplexMatrix anti = ComplexMatrix::Zero(n, n);
            anti(j, k) = Complex(0.0, -inv_sqrt2);
            anti(k, j) = Complex(0.0, inv_sqrt2);
            ops.emplace_back(anti);
        }
    }
    for (int l = 1; l < n; ++l) {
        const double c = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
        ComplexMatrix diag = ComplexMatrix::Zero(n, n);
        for (int j = 0; j < l; ++j) {
            diag(j, j) = c;
        }
        diag(l, l) = -c * l;
        ops.emplace_back(diag);
    }
    return ObservableBasis(std::move(ops));
}

/// Q(rho): sum of skew informations over an orthonormal observable basis.
inline double q_total(const DensityMatrix &rho, const ObservableBasis &basis) {
    detail::require_same_dim(rho.dim(), basis.dim(), "q_total");
    double total = 0.0;
    for (const auto &h : basis.operators()) {
        total += skew_information(rho, h);
    }
    return total;
}

/**
 * Closed form Q(rho) = n - (Tr sqrt(rho))^2.
 *
 * Follows from the completeness relation sum_i H_i X H_i = Tr(X) I of any
 * orthonormal Hermitian basis. Kept separate from q_total(), which is the
 * defining sum.
 */
inline double q_total_closed_form(const DensityMatrix &rho) {
    const double t = rho.sqrt().matrix().trace().real();
    return static_cast<double>(rho.dim()) - t * t;
}

} // namespace wyskew

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

/**
 * @file hermitian.hpp
 * Validated Hermitian and density-matrix types plus the dense spectral
 * machinery the rest of the library is built on: eigendecomposition, the
 * principal square root of a state, commutators, the Frobenius norm,
 * Kronecker products and partial traces.
 *
 * All types are immutable after construction. A DensityMatrix computes its
 * spectrum and square root eagerly, so every accessor is a pure read and
 * instances can be shared freely between threads.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"

namespace wyskew {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Largest supported matrix dimension.
inline constexpr int kMaxDim = 64;

namespace tol {
/// Relative anti-Hermitian residual accepted by HermitianOperator.
inline constexpr double kHermitian = 1e-10;
/// Allowed deviation of a density matrix trace from one.
inline constexpr double kTrace = 1e-10;
/// Eigenvalues in [-kNegativeEigenvalue, 0) are rounding noise and are
/// clamped to zero; anything more negative is rejected.
inline constexpr double kNegativeEigenvalue = 1e-10;
} // namespace tol

namespace detail {

inline void check_matrix(const ComplexMatrix &m, const char *what) {
    if (m.rows() != m.cols()) {
        throw ValidationError(std::string(what) + ": matrix is not square (" +
                              std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ")");
    }
    if (m.rows() < 1) {
        throw ValidationError(std::string(what) + ": empty matrix");
    }
    if (m.rows() > kMaxDim) {
        throw ValidationError(std::string(what) + ": dimension " +
                              std::to_string(m.rows()) +
                              " exceeds the supported maximum of " +
                              std::to_string(kMaxDim));
    }
    if (!m.allFinite()) {
        throw ValidationError(std::string(what) +
                              ": matrix contains NaN or Inf entries");
    }
}

inline void require_same_dim(Eigen::Index a, Eigen::Index b,
                             const char *what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" +
                             std::to_string(a) + " vs " + std::to_string(b) +
                             ")");
    }
}

} // namespace detail

/**
 * A complex Hermitian matrix used as an observable.
 *
 * Inputs within 1e-10 * max(1, ||M||_F) of Hermitian (max-entry norm of
 * M - M^dagger) are accepted and stored symmetrized as (M + M^dagger) / 2,
 * which is bitwise Hermitian.
 */
class HermitianOperator {
  public:
    explicit HermitianOperator(const ComplexMatrix &m) {
        detail::check_matrix(m, "HermitianOperator");
        const double skew = (m - m.adjoint()).cwiseAbs().maxCoeff();
        const double scale = std::max(1.0, m.norm());
        if (skew > tol::kHermitian * scale) {
            throw ValidationError(
                "HermitianOperator: matrix is not Hermitian (max |M - M^H| = " +
                std::to_string(skew) + ")");
        }
        matrix_ = 0.5 * (m + m.adjoint());
    }

    static HermitianOperator zero(int dim) {
        return HermitianOperator(ComplexMatrix::Zero(dim, dim));
    }

    static HermitianOperator identity(int dim) {
        return HermitianOperator(ComplexMatrix::Identity(dim, dim));
    }

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    [[nodiscard]] int dim() const noexcept {
        return static_cast<int>(matrix_.rows());
    }

    friend HermitianOperator operator+(const HermitianOperator &a,
                                       const HermitianOperator &b) {
        detail::require_same_dim(a.dim(), b.dim(), "operator+");
        return HermitianOperator(a.matrix_ + b.matrix_);
    }
    friend HermitianOperator operator-(const HermitianOperator &a,
                                       const HermitianOperator &b) {
        detail::require_same_dim(a.dim(), b.dim(), "operator-");
        return HermitianOperator(a.matrix_ - b.matrix_);
    }
    friend HermitianOperator operator-(const HermitianOperator &a) {
        return HermitianOperator(-a.matrix_);
    }
    friend HermitianOperator operator*(double c, const HermitianOperator &a) {
        return HermitianOperator(c * a.matrix_);
    }
    friend HermitianOperator operator*(const HermitianOperator &a, double c) {
        return c * a;
    }

  private:
    ComplexMatrix matrix_;
};

/// Eigenvalues in descending order with the matching unitary eigenvector
/// matrix (column k belongs to eigenvalue k).
struct Spectrum {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;
};

/**
 * Eigendecomposition of a Hermitian operator.
 *
 * Eigenvalues are sorted descending; ties keep the order produced by the
 * solver. No canonicalization happens inside degenerate eigenspaces.
 */
inline Spectrum spectral_decompose(const HermitianOperator &h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError(
            "spectral_decompose: eigensolver failed to converge on a " +
            std::to_string(h.dim()) + "x" + std::to_string(h.dim()) +
            " matrix");
    }
    const RealVector &values = solver.eigenvalues();
    const ComplexMatrix &vectors = solver.eigenvectors();
    const auto n = values.size();

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) {
                         return values(a) > values(b);
                     });

    Spectrum out{RealVector(n), ComplexMatrix(n, n)};
    for (Eigen::Index k = 0; k < n; ++k) {
        const auto src = order[static_cast<std::size_t>(k)];
        out.eigenvalues(k) = values(src);
        out.eigenvectors.col(k) = vectors.col(src);
    }
    return out;
}

/**
 * A quantum state: positive semidefinite Hermitian matrix of unit trace.
 *
 * The spectrum and the principal square root are computed once in the
 * constructor. Eigenvalues down to -1e-10 are treated as rounding noise;
 * before the square root is taken, anything below 16 * dim * machine epsilon
 * is set to zero and the rest is capped at 1.
 */
class DensityMatrix {
  public:
    explicit DensityMatrix(const ComplexMatrix &m)
        : DensityMatrix(HermitianOperator(m)) {}

    explicit DensityMatrix(HermitianOperator h)
        : op_(std::move(h)), sqrt_(HermitianOperator::zero(op_.dim())) {
        const double trace = op_.matrix().trace().real();
        if (std::abs(trace - 1.0) > tol::kTrace) {
            throw ValidationError("DensityMatrix: trace is " +
                                  std::to_string(trace) + ", expected 1");
        }
        Spectrum spectrum = spectral_decompose(op_);
        const double smallest = spectrum.eigenvalues.minCoeff();
        if (smallest < -tol::kNegativeEigenvalue) {
            throw ValidationError(
                "DensityMatrix: matrix is not positive semidefinite "
                "(eigenvalue " +
                std::to_string(smallest) + ")");
        }
        eigenvalues_ = std::move(spectrum.eigenvalues);
        eigenvectors_ = std::move(spectrum.eigenvectors);

        // Eigenvalues at the round-off floor of the solver are zero; their
        // square roots (~1e-8) would otherwise swamp pure-state results.
        const double floor = 16.0 * op_.dim() *
                             std::numeric_limits<double>::epsilon();
        const RealVector roots =
            eigenvalues_
                .unaryExpr([floor](double v) { return v < floor ? 0.0 : v; })
                .cwiseMin(1.0)
                .cwiseSqrt();
        sqrt_ = HermitianOperator(eigenvectors_ * roots.asDiagonal() *
                                  eigenvectors_.adjoint());
    }

    /// Projector onto the normalized direction of `psi`.
    static DensityMatrix pure(const StateVector &psi) {
        const double norm = psi.norm();
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            throw ValidationError("DensityMatrix::pure: state vector has "
                                  "zero or non-finite norm");
        }
        const StateVector unit = psi / norm;
        return DensityMatrix(ComplexMatrix(unit * unit.adjoint()));
    }

    static DensityMatrix maximally_mixed(int dim) {
        return DensityMatrix(ComplexMatrix(ComplexMatrix::Identity(dim, dim) /
                                           static_cast<double>(dim)));
    }

    [[nodiscard]] const HermitianOperator &op() const noexcept { return op_; }
    [[nodiscard]] const ComplexMatrix &matrix() const noexcept {
        return op_.matrix();
    }
    [[nodiscard]] int dim() const noexcept { return op_.dim(); }
    [[nodiscard]] const RealVector &eigenvalues() const noexcept {
        return eigenvalues_;
    }
    [[nodiscard]] const ComplexMatrix &eigenvectors() const noexcept {
        return eigenvectors_;
    }
    /// Principal (PSD) square root.
    [[nodiscard]] const HermitianOperator &sqrt() const noexcept {
        return sqrt_;
    }

  private:
    HermitianOperator op_;
    RealVector eigenvalues_;
    ComplexMatrix eigenvectors_;
    HermitianOperator sqrt_;
};

/// Principal square root of a state. Squares back to the state within
/// Frobenius error 1e-9.
inline HermitianOperator psd_sqrt(const DensityMatrix &rho) {
    return rho.sqrt();
}

/// AB - BA.
inline ComplexMatrix commutator(const ComplexMatrix &a,
                                const ComplexMatrix &b) {
    detail::require_same_dim(a.rows(), b.rows(), "commutator");
    detail::require_same_dim(a.cols(), b.cols(), "commutator");
    return a * b - b * a;
}

inline double frobenius_norm(const ComplexMatrix &m) { return m.norm(); }

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
inline ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

inline HermitianOperator tensor(const HermitianOperator &a,
                                const HermitianOperator &b) {
    return HermitianOperator(tensor(a.matrix(), b.matrix()));
}

inline DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    return DensityMatrix(tensor(a.matrix(), b.matrix()));
}

enum class Subsystem { first, second };

/**
 * Reduces a state on a dimA x dimB bipartite space to the kept factor.
 *
 * Composite index convention: (a, b) -> a * dimB + b, matching tensor().
 */
inline DensityMatrix partial_trace(const DensityMatrix &rho, int dim_a,
                                   int dim_b, Subsystem keep) {
    if (dim_a < 1 || dim_b < 1 || dim_a * dim_b != rho.dim()) {
        throw DimensionError("partial_trace: " + std::to_string(dim_a) + " x " +
                             std::to_string(dim_b) +
                             " does not factor a state of dimension " +
                             std::to_string(rho.dim()));
    }
    const ComplexMatrix &m = rho.matrix();
    if (keep == Subsystem::first) {
        ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
        for (int a = 0; a < dim_a; ++a) {
            for (int ap = 0; ap < dim_a; ++ap) {
                Complex acc{0.0, 0.0};
                for (int b = 0; b < dim_b; ++b) {
                    acc += m(a * dim_b + b, ap * dim_b + b);
                }
                out(a, ap) = acc;
            }
        }
        return DensityMatrix(out);
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
    for (int b = 0; b < dim_b; ++b) {
        for (int bp = 0; bp < dim_b; ++bp) {
            Complex acc{0.0, 0.0};
            for (int a = 0; a < dim_a; ++a) {
                acc += m(a * dim_b + b, a * dim_b + bp);
            }
            out(b, bp) = acc;
        }
    }
    return DensityMatrix(out);
}

} // namespace wyskew

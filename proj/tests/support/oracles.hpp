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

// Reference computations that avoid the library's eigendecomposition path.
// Used only to produce expected values in tests.
#pragma once

#include <array>
#include <cmath>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <wyskew/hermitian.hpp>

namespace wyskew::oracle {

/// <psi|H^2|psi> - <psi|H|psi>^2 for a normalized ket.
inline double pure_variance(const StateVector &psi, const ComplexMatrix &h) {
    const StateVector hpsi = h * psi;
    const double mean = psi.dot(hpsi).real();
    return hpsi.squaredNorm() - mean * mean;
}

/// Square root of a full-rank PSD matrix by the Schur method.
inline ComplexMatrix schur_sqrt(const ComplexMatrix &rho) {
    return rho.sqrt();
}

/// Tr(rho H^2) - Tr(sqrt(rho) H sqrt(rho) H) with sqrt(rho) from the Schur
/// method. rho must be full rank.
inline double skew_trace_form(const ComplexMatrix &rho,
                              const ComplexMatrix &h) {
    const ComplexMatrix s = schur_sqrt(rho);
    return (rho * h * h).trace().real() - (s * h * s * h).trace().real();
}

/// 2x2 PSD square root (rho + sqrt(det) I) / sqrt(Tr rho + 2 sqrt(det)).
inline ComplexMatrix qubit_sqrt(const ComplexMatrix &rho) {
    const double det = std::max(0.0, rho.determinant().real());
    const double s = std::sqrt(det);
    const double t = std::sqrt(rho.trace().real() + 2.0 * s);
    return (rho + s * ComplexMatrix::Identity(2, 2)) / t;
}

/// I_rho(n . sigma + c I) for rho = (I + r . sigma)/2:
/// (1 - sqrt(1 - |r|^2)) |r_hat x n|^2.
inline double qubit_skew(const std::array<double, 3> &r,
                         const std::array<double, 3> &n) {
    const double rn = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (rn == 0.0) {
        return 0.0;
    }
    const std::array<double, 3> u{r[0] / rn, r[1] / rn, r[2] / rn};
    const std::array<double, 3> cross{u[1] * n[2] - u[2] * n[1],
                                      u[2] * n[0] - u[0] * n[2],
                                      u[0] * n[1] - u[1] * n[0]};
    const double c2 =
        cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2];
    return (1.0 - std::sqrt(std::max(0.0, 1.0 - rn * rn))) * c2;
}

} // namespace wyskew::oracle

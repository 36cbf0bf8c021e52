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
 * @file catalog.hpp
 * Named operators and state families: Pauli matrices, spin-1 angular
 * momentum, Bloch-sphere qubit states, the two one-parameter families used
 * for bound comparisons, and the Bell states.
 */
#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bounds.hpp"

namespace wyskew {

inline HermitianOperator sigma_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return HermitianOperator(m);
}

inline HermitianOperator sigma_y() {
    ComplexMatrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return HermitianOperator(m);
}

inline HermitianOperator sigma_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return HermitianOperator(m);
}

/// {sigma_1, sigma_2, sigma_3}.
inline ObservableSet pauli() { return {sigma_x(), sigma_y(), sigma_z()}; }

/**
 * Spin-1 angular momentum {J_x, J_y, J_z} with hbar = 1 in the basis
 * m = +1, 0, -1.
 *
 * J_z is diag(1, 0, -1). Scaling it by 1/sqrt(2) like J_x and J_y would
 * break [J_x, J_y] = i J_z.
 */
inline ObservableSet spin1_J() {
    const double c = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    ComplexMatrix jx(3, 3);
    jx << 0.0, c, 0.0, //
        c, 0.0, c,     //
        0.0, c, 0.0;
    ComplexMatrix jy(3, 3);
    jy << 0.0, -i * c, 0.0, //
        i * c, 0.0, -i * c, //
        0.0, i * c, 0.0;
    ComplexMatrix jz = ComplexMatrix::Zero(3, 3);
    jz(0, 0) = 1.0;
    jz(2, 2) = -1.0;
    return {HermitianOperator(jx), HermitianOperator(jy),
            HermitianOperator(jz)};
}

/// Real 3-vector with |r| <= 1 (+1e-12 slack).
class BlochVector {
  public:
    static constexpr double kNormSlack = 1e-12;

    BlochVector(double x, double y, double z) : r_{x, y, z} {
        if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
            throw ValidationError("BlochVector: non-finite component");
        }
        if (norm() > 1.0 + kNormSlack) {
            throw ValidationError("BlochVector: |r| = " +
                                  std::to_string(norm()) + " exceeds 1");
        }
    }

    [[nodiscard]] double x() const noexcept { return r_[0]; }
    [[nodiscard]] double y() const noexcept { return r_[1]; }
    [[nodiscard]] double z() const noexcept { return r_[2]; }
    [[nodiscard]] double norm() const noexcept {
        return std::sqrt(r_[0] * r_[0] + r_[1] * r_[1] + r_[2] * r_[2]);
    }

  private:
    std::array<double, 3> r_;
};

/// (I + r . sigma) / 2.
inline DensityMatrix bloch_state(const BlochVector &r) {
    const ComplexMatrix m =
        0.5 * (ComplexMatrix::Identity(2, 2) + r.x() * sigma_x().matrix() +
               r.y() * sigma_y().matrix() + r.z() * sigma_z().matrix());
    return DensityMatrix(m);
}

/// Computational basis vector |index> in dimension dim.
inline StateVector basis_ket(int dim, int index) {
    StateVector v = StateVector::Zero(dim);
    v(index) = 1.0;
    return v;
}

enum class Family { fig1_bloch, fig2_spin1 };

inline std::string_view family_name(Family f) {
    switch (f) {
    case Family::fig1_bloch:
        return "fig1_bloch";
    case Family::fig2_spin1:
        return "fig2_spin1";
    }
    return "";
}

inline std::optional<Family> parse_family(std::string_view name) {
    if (name == "fig1_bloch") {
        return Family::fig1_bloch;
    }
    if (name == "fig2_spin1") {
        return Family::fig2_spin1;
    }
    return std::nullopt;
}

struct FamilyMember {
    DensityMatrix rho;
    ObservableSet observables;
};

/**
 * One member of a named one-parameter family.
 *
 * fig1_bloch: qubit with Bloch vector (sqrt(3)/2)(cos t, sin t, 0) and the
 * Pauli triple. fig2_spin1: the pure spin-1 state
 * cos(t/2)|0> + sin(t/2)|2> and {J_x, J_y, J_z}.
 */
inline FamilyMember figure_family(Family family, double theta) {
    switch (family) {
    case Family::fig1_bloch: {
        const double r = std::sqrt(3.0) / 2.0;
        return {bloch_state(BlochVector(r * std::cos(theta),
                                        r * std::sin(theta), 0.0)),
                pauli()};
    }
    case Family::fig2_spin1: {
        StateVector psi = StateVector::Zero(3);
        psi(0) = std::cos(theta / 2.0);
        psi(2) = std::sin(theta / 2.0);
        return {DensityMatrix::pure(psi), spin1_J()};
    }
    }
    throw ValidationError("figure_family: unknown family");
}

inline FamilyMember figure_family(std::string_view name, double theta) {
    const auto family = parse_family(name);
    if (!family) {
        throw ValidationError("figure_family: unknown family '" +
                              std::string(name) + "'");
    }
    return figure_family(*family, theta);
}

/// |Phi+>, |Phi->, |Psi+>, |Psi-> as density matrices on 2 x 2.
inline std::vector<DensityMatrix> bell_states() {
    const double c = 1.0 / std::sqrt(2.0);
    const std::array<std::array<double, 4>, 4> kets{{
        {c, 0.0, 0.0, c},
        {c, 0.0, 0.0, -c},
        {0.0, c, c, 0.0},
        {0.0, c, -c, 0.0},
    }};
    std::vector<DensityMatrix> out;
    out.reserve(kets.size());
    for (const auto &k : kets) {
        StateVector psi(4);
        for (int i = 0; i < 4; ++i) {
            psi(i) = k[static_cast<std::size_t>(i)];
        }
        out.push_back(DensityMatrix::pure(psi));
    }
    return out;
}

/// The singlet |Psi-> = (|01> - |10>)/sqrt(2).
inline DensityMatrix singlet() { return bell_states()[3]; }

} // namespace wyskew

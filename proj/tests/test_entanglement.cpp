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
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include <wyskew/catalog.hpp>
#include <wyskew/entanglement.hpp>

#include "support/oracles.hpp"
#include "support/random_states.hpp"

namespace wyskew {
namespace {

using testing::Rng;

DensityMatrix ket(int dim, int index) {
    return DensityMatrix::pure(basis_ket(dim, index));
}

// -----------------------------------------------------------------------------
// sum_observable

TEST(SumObservable, Examples) {
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected.diagonal() << 2.0, 0.0, 0.0, -2.0;
    EXPECT_EQ(sum_observable(sigma_z(), sigma_z()).matrix(), expected);

    EXPECT_EQ(sum_observable(sigma_x(), HermitianOperator::zero(2)).matrix(),
              tensor(sigma_x().matrix(), ComplexMatrix::Identity(2, 2)));

    // M^2 = 2 (I + s1 (x) s1) and <s1 (x) s1> = 1 on |Phi+>, <M> = 0.
    const auto phi_plus = bell_states()[0];
    EXPECT_NEAR(variance(phi_plus, sum_observable(sigma_x(), sigma_x())), 4.0,
                1e-14);
}

TEST(SumObservable, MixedDimensions) {
    const auto m = sum_observable(sigma_z(), spin1_J()[2]);
    EXPECT_EQ(m.dim(), 6);
    EXPECT_EQ(m.matrix()(0, 0), Complex(2.0, 0.0));
    EXPECT_EQ(m.matrix()(5, 5), Complex(-2.0, 0.0));
}

// Skew information is not subadditive: for |Phi+> and A = B = s3 the
// global value 4 exceeds the sum of the marginal values 0 + 0.
TEST(SumObservable, SkewInformationIsNotSubadditive) {
    const auto phi_plus = bell_states()[0];
    const auto m = sum_observable(sigma_z(), sigma_z());
    const auto r1 = partial_trace(phi_plus, 2, 2, Subsystem::first);
    const auto r2 = partial_trace(phi_plus, 2, 2, Subsystem::second);
    EXPECT_NEAR(skew_information(phi_plus, m), 4.0, 1e-12);
    EXPECT_NEAR(skew_information(r1, sigma_z()) +
                    skew_information(r2, sigma_z()),
                0.0, 1e-14);
}

// -----------------------------------------------------------------------------
// additivity and monotonicity

TEST(Additivity, Examples) {
    const auto mixed = DensityMatrix::maximally_mixed(2);
    const auto zero = check_additivity(mixed, mixed, sigma_x(), sigma_y());
    EXPECT_NEAR(zero.lhs, 0.0, 1e-15);
    EXPECT_NEAR(zero.rhs, 0.0, 1e-15);

    const auto sides = check_additivity(ket(2, 0), ket(2, 0), sigma_x(),
                                        sigma_y());
    EXPECT_NEAR(sides.lhs, 2.0, 1e-12);
    EXPECT_NEAR(sides.rhs, 2.0, 1e-12);

    EXPECT_THROW(check_additivity(ket(2, 0), ket(3, 0), sigma_x(), sigma_y()),
                 DimensionError);
}

TEST(Additivity, RandomProductStates) {
    Rng rng(201);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int db = trial % 2 == 0 ? 2 : 3;
        const auto ra = testing::random_mixed(2, rng);
        const auto rb = testing::random_mixed(db, rng);
        const auto sides =
            check_additivity(ra, rb, testing::random_hermitian(2, rng),
                             testing::random_hermitian(db, rng));
        worst = std::max(worst, std::abs(sides.lhs - sides.rhs));
    }
    EXPECT_LT(worst, 1e-9);
}

TEST(Monotonicity, Examples) {
    Rng rng(202);
    const auto ra = testing::random_density(2, rng);
    const auto rb = testing::random_density(3, rng);
    const auto a = testing::random_hermitian(2, rng);
    const auto prod = check_monotonicity(tensor(ra, rb), 2, 3, a);
    EXPECT_NEAR(prod.global, prod.local, 1e-10);

    const auto bell = check_monotonicity(bell_states()[0], 2, 2, sigma_z());
    EXPECT_NEAR(bell.global, 1.0, 1e-12);
    EXPECT_NEAR(bell.local, 0.0, 1e-14);

    EXPECT_THROW(check_monotonicity(bell_states()[0], 2, 3, sigma_z()),
                 DimensionError);
}

TEST(Monotonicity, RandomBipartiteStates) {
    Rng rng(203);
    for (int trial = 0; trial < 100; ++trial) {
        const int db = trial % 2 == 0 ? 2 : 3;
        const auto rho = testing::random_mixed(2 * db, rng);
        const auto sides =
            check_monotonicity(rho, 2, db, testing::random_hermitian(2, rng));
        EXPECT_GE(sides.global, sides.local - 1e-9);
    }
}

// -----------------------------------------------------------------------------
// Q convexity

TEST(QConvexity, SingleProductTermIsEquality) {
    Rng rng(204);
    const ProductDecomposition d(
        {1.0}, {{testing::random_density(2, rng), testing::random_density(2, rng)}});
    const auto check = verify_q_convexity(d, gell_mann_basis(4));
    EXPECT_NEAR(check.lhs, check.rhs, 1e-10);
    EXPECT_TRUE(check.holds);
}

TEST(QConvexity, ClassicalMixtureLosesInformation) {
    // rho = (|00><00| + |11><11|)/2: Q = 4 - (2 / sqrt2)^2 = 2, each pure
    // term has Q = 4 - 1 = 3.
    const ProductDecomposition d({0.5, 0.5}, {{ket(2, 0), ket(2, 0)},
                                              {ket(2, 1), ket(2, 1)}});
    const auto check = verify_q_convexity(d, gell_mann_basis(4));
    EXPECT_NEAR(check.lhs, 2.0, 1e-10);
    EXPECT_NEAR(check.rhs, 3.0, 1e-10);
    EXPECT_TRUE(check.holds);
}

TEST(QConvexity, RandomDecompositions) {
    Rng rng(205);
    for (int db : {2, 3}) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<double> w(10);
            double total = 0.0;
            for (double &p : w) {
                p = testing::uniform_real(0.0, 1.0, rng);
                total += p;
            }
            std::vector<std::pair<DensityMatrix, DensityMatrix>> factors;
            for (double &p : w) {
                p /= total;
                factors.emplace_back(testing::random_mixed(2, rng),
                                     testing::random_mixed(db, rng));
            }
            const ProductDecomposition d(w, factors);
            EXPECT_TRUE(verify_q_convexity(d, gell_mann_basis(2 * db)).holds);
        }
    }
}

TEST(QConvexity, ValidationErrors) {
    EXPECT_THROW(ProductDecomposition({1.1, -0.1}, {{ket(2, 0), ket(2, 0)},
                                                    {ket(2, 1), ket(2, 1)}}),
                 ValidationError);
    EXPECT_THROW(ProductDecomposition({0.5, 0.4}, {{ket(2, 0), ket(2, 0)},
                                                   {ket(2, 1), ket(2, 1)}}),
                 ValidationError);
    EXPECT_THROW(ProductDecomposition({1.0}, {}), ValidationError);
    EXPECT_THROW(ProductDecomposition({0.5, 0.5}, {{ket(2, 0), ket(2, 0)},
                                                   {ket(2, 1), ket(3, 1)}}),
                 DimensionError);
    const ProductDecomposition d({1.0}, {{ket(2, 0), ket(2, 0)}});
    EXPECT_THROW(verify_q_convexity(d, gell_mann_basis(3)), DimensionError);
}

// -----------------------------------------------------------------------------
// optimal_constant

// Sum of pure-state variances over a Bloch-sphere grid; the minimum is
// reached on the grid points for the sets used below.
double grid_minimum(const ObservableSet &s) {
    double best = 1e300;
    const int steps = 360;
    for (int i = 0; i <= steps; ++i) {
        const double theta = std::numbers::pi * i / steps;
        for (int k = 0; k < 2 * steps; ++k) {
            const double phi = std::numbers::pi * k / steps;
            StateVector psi(2);
            psi(0) = std::cos(theta / 2);
            psi(1) = std::polar(std::sin(theta / 2), phi);
            double total = 0.0;
            for (const auto &op : s) {
                total += oracle::pure_variance(psi, op.matrix());
            }
            best = std::min(best, total);
        }
    }
    return best;
}

TEST(OptimalConstant, PauliTriple) {
    EXPECT_NEAR(grid_minimum(pauli()), 2.0, 1e-12);
    EXPECT_NEAR(optimal_constant(pauli(), 8, 1), 2.0, 1e-6);
}

TEST(OptimalConstant, SingleObservableHasEigenstate) {
    EXPECT_NEAR(optimal_constant(ObservableSet{sigma_z()}, 8, 2), 0.0, 1e-6);
}

TEST(OptimalConstant, TwoPaulis) {
    const ObservableSet s{sigma_x(), sigma_z()};
    EXPECT_NEAR(grid_minimum(s), 1.0, 1e-12);
    EXPECT_NEAR(optimal_constant(s, 16, 3), 1.0, 1e-6);
}

TEST(OptimalConstant, Spin1) {
    // Pure spin-1 states have sum of variances >= 1 (= j), reached on |m=+1>.
    EXPECT_NEAR(optimal_constant(spin1_J(), 16, 4), 1.0, 1e-6);
}

TEST(OptimalConstant, DeterministicForSeed) {
    const ObservableSet s{sigma_x(), sigma_z()};
    const double a = optimal_constant(s, 12, 99);
    const double b = optimal_constant(s, 12, 99);
    EXPECT_EQ(a, b);
    EXPECT_THROW(optimal_constant(s, 0, 1), ValidationError);
}

// -----------------------------------------------------------------------------
// lur_witness

TEST(LurWitness, SingletViolates) {
    const auto v = lur_witness(singlet(), pauli(), pauli(), 2.0, 2.0);
    EXPECT_NEAR(v.total, 0.0, 1e-12);
    EXPECT_EQ(v.threshold, 4.0);
    EXPECT_TRUE(v.violated);
}

TEST(LurWitness, ProductStateSitsOnBoundary) {
    const auto v = lur_witness(ket(4, 0), pauli(), pauli(), 2.0, 2.0);
    EXPECT_NEAR(v.total, 4.0, 1e-12);
    EXPECT_FALSE(v.violated);
}

// The criterion flags the separable maximally mixed state; reported as is.
TEST(LurWitness, MaximallyMixedStateIsFlagged) {
    const auto v = lur_witness(DensityMatrix::maximally_mixed(4), pauli(),
                               pauli(), 2.0, 2.0);
    EXPECT_NEAR(v.total, 0.0, 1e-14);
    EXPECT_TRUE(v.violated);
}

TEST(LurWitness, Errors) {
    EXPECT_THROW(lur_witness(singlet(), pauli(),
                             ObservableSet{sigma_x(), sigma_y()}, 2.0, 2.0),
                 ValidationError);
    EXPECT_THROW(lur_witness(DensityMatrix::maximally_mixed(6), pauli(),
                             pauli(), 2.0, 2.0),
                 DimensionError);
}

} // namespace
} // namespace wyskew

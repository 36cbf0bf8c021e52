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
 * @file entanglement.hpp
 * Bipartite tools built on skew information: sum observables
 * A (x) I + I (x) B, additivity and partial-trace monotonicity checks,
 * verification of Q(rho) convexity for an explicit product decomposition,
 * and the local uncertainty relation witness
 *
 *     sum_i I_rho(A_i (x) I + I (x) B_i) >= c_A + c_B   (rho separable).
 *
 * Caveat: the witness threshold is only meaningful for pure-state
 * constants, and even then a separable mixed state can fall below it since
 * skew information is convex in rho. lur_witness reports the comparison as
 * is and does not try to correct the criterion.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "parallel.hpp"

namespace wyskew {

/// A (x) I_dimB + I_dimA (x) B.
inline HermitianOperator sum_observable(const HermitianOperator &a,
                                        const HermitianOperator &b) {
    const ComplexMatrix ia = ComplexMatrix::Identity(a.dim(), a.dim());
    const ComplexMatrix ib = ComplexMatrix::Identity(b.dim(), b.dim());
    return HermitianOperator(
        ComplexMatrix(tensor(a.matrix(), ib) + tensor(ia, b.matrix())));
}

/// lhs = I_{rhoA (x) rhoB}(A (x) I + I (x) B), rhs = I_rhoA(A) + I_rhoB(B).
inline IdentitySides check_additivity(const DensityMatrix &rho_a,
                                      const DensityMatrix &rho_b,
                                      const HermitianOperator &a,
                                      const HermitianOperator &b) {
    detail::require_same_dim(rho_a.dim(), a.dim(), "check_additivity");
    detail::require_same_dim(rho_b.dim(), b.dim(), "check_additivity");
    const DensityMatrix product = tensor(rho_a, rho_b);
    return {skew_information(product, sum_observable(a, b)),
            skew_information(rho_a, a) + skew_information(rho_b, b)};
}

struct MonotonicitySides {
    double global; ///< I_rho(A (x) I)
    double local;  ///< I_{Tr_B rho}(A)
};

inline MonotonicitySides check_monotonicity(const DensityMatrix &rho,
                                            int dim_a, int dim_b,
                                            const HermitianOperator &a) {
    detail::require_same_dim(a.dim(), dim_a, "check_monotonicity");
    const DensityMatrix marginal =
        partial_trace(rho, dim_a, dim_b, Subsystem::first);
    const HermitianOperator lifted = tensor(a, HermitianOperator::identity(dim_b));
    return {skew_information(rho, lifted), skew_information(marginal, a)};
}

/// sum_k p_k rhoA_k (x) rhoB_k with validated weights and factor dims.
class ProductDecomposition {
  public:
    static constexpr double kWeightTol = 1e-10;

    ProductDecomposition(std::vector<double> weights,
                         std::vector<std::pair<DensityMatrix, DensityMatrix>> factors)
        : weights_(std::move(weights)), factors_(std::move(factors)) {
        if (weights_.empty() || weights_.size() != factors_.size()) {
            throw ValidationError(
                "ProductDecomposition: need one weight per factor pair (" +
                std::to_string(weights_.size()) + " weights, " +
                std::to_string(factors_.size()) + " pairs)");
        }
        double total = 0.0;
        for (double p : weights_) {
            if (!(p >= 0.0) || !std::isfinite(p)) {
                throw ValidationError(
                    "ProductDecomposition: negative or non-finite weight " +
                    std::to_string(p));
            }
            total += p;
        }
        if (std::abs(total - 1.0) > kWeightTol) {
            throw ValidationError("ProductDecomposition: weights sum to " +
                                  std::to_string(total) + ", expected 1");
        }
        for (const auto &[ra, rb] : factors_) {
            detail::require_same_dim(ra.dim(), dim_a(), "ProductDecomposition");
            detail::require_same_dim(rb.dim(), dim_b(), "ProductDecomposition");
        }
    }

    [[nodiscard]] int dim_a() const { return factors_.front().first.dim(); }
    [[nodiscard]] int dim_b() const { return factors_.front().second.dim(); }
    [[nodiscard]] const std::vector<double> &weights() const { return weights_; }
    [[nodiscard]] const std::vector<std::pair<DensityMatrix, DensityMatrix>> &
    factors() const {
        return factors_;
    }

    [[nodiscard]] DensityMatrix assemble() const {
        const int n = dim_a() * dim_b();
        ComplexMatrix m = ComplexMatrix::Zero(n, n);
        for (std::size_t k = 0; k < weights_.size(); ++k) {
            m += weights_[k] * tensor(factors_[k].first.matrix(),
                                      factors_[k].second.matrix());
        }
        return DensityMatrix(m);
    }

  private:
    std::vector<double> weights_;
    std::vector<std::pair<DensityMatrix, DensityMatrix>> factors_;
};

struct ConvexityCheck {
    double lhs; ///< Q(rho)
    double rhs; ///< sum_k p_k Q(rhoA_k (x) rhoB_k)
    bool holds; ///< lhs <= rhs + 1e-9
};

/// Checks Q(rho) <= sum_k p_k Q(rho_k) for the given decomposition only.
inline ConvexityCheck verify_q_convexity(const ProductDecomposition &decomp,
                                         const ObservableBasis &basis) {
    detail::require_same_dim(basis.dim(), decomp.dim_a() * decomp.dim_b(),
                             "verify_q_convexity");
    ConvexityCheck out{};
    out.lhs = q_total(decomp.assemble(), basis);
    out.rhs = 0.0;
    for (std::size_t k = 0; k < decomp.weights().size(); ++k) {
        const auto &[ra, rb] = decomp.factors()[k];
        out.rhs += decomp.weights()[k] * q_total(tensor(ra, rb), basis);
    }
    out.holds = out.lhs <= out.rhs + kSatisfactionTol;
    return out;
}

namespace detail {

/// sum_i Var_psi(A_i) for a (not necessarily normalized) vector psi. Equal
/// to the sum of skew informations at the pure state |psi><psi|.
inline double pure_state_uncertainty(const ObservableSet &s,
                                     const StateVector &psi) {
    const double norm2 = psi.squaredNorm();
    double total = 0.0;
    for (const auto &op : s) {
        const StateVector a_psi = op.matrix() * psi;
        const double mean = psi.dot(a_psi).real() / norm2;
        const double second = a_psi.squaredNorm() / norm2;
        total += second - mean * mean;
    }
    return total;
}

inline StateVector unpack_state(const std::vector<double> &x, int dim) {
    StateVector psi(dim);
    for (int k = 0; k < dim; ++k) {
        psi(k) = Complex(x[static_cast<std::size_t>(k)],
                         x[static_cast<std::size_t>(dim + k)]);
    }
    return psi;
}

/// Coordinate descent on the real and imaginary parts of one start vector.
inline double refine_pure_minimum(const ObservableSet &s,
                                  std::vector<double> x) {
    const int dim = s.dim();
    auto objective = [&](const std::vector<double> &v) {
        return pure_state_uncertainty(s, unpack_state(v, dim));
    };
    auto renormalize = [&](std::vector<double> &v) {
        double n2 = 0.0;
        for (double c : v) {
            n2 += c * c;
        }
        const double n = std::sqrt(n2);
        for (double &c : v) {
            c /= n;
        }
    };
    renormalize(x);
    double best = objective(x);
    double step = 0.25;
    constexpr double kMinStep = 1e-8;
    constexpr double kImprovementTol = 1e-10;
    constexpr int kMaxSweeps = 100000;
    for (int sweep = 0; sweep < kMaxSweeps && step >= kMinStep; ++sweep) {
        const double before = best;
        for (std::size_t k = 0; k < x.size(); ++k) {
            for (double dir : {+1.0, -1.0}) {
                const double saved = x[k];
                x[k] = saved + dir * step;
                const double trial = objective(x);
                if (trial < best) {
                    best = trial;
                    break;
                }
                x[k] = saved;
            }
        }
        renormalize(x);
        if (before - best < kImprovementTol) {
            step *= 0.5;
        }
    }
    return std::max(0.0, best);
}

} // namespace detail

/**
 * Estimates c = min over pure states of sum_i I_rho(A_i).
 *
 * Each trial draws a Haar-random start vector from an RNG seeded by
 * (seed, trial index) and refines it by coordinate descent with a shrinking
 * step. Trials may run concurrently; the result depends only on
 * (S, trials, seed). The value is an upper estimate of the true minimum.
 * The minimum over all (mixed) states would be 0, reached at the maximally
 * mixed state.
 */
inline double optimal_constant(const ObservableSet &s, int trials,
                               std::uint64_t seed) {
    if (trials < 1) {
        throw ValidationError("optimal_constant: trials must be >= 1");
    }
    const int dim = s.dim();
    const auto results = detail::parallel_map(
        static_cast<std::size_t>(trials), [&](std::size_t trial) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed),
                              static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(trial)};
            std::mt19937_64 rng(seq);
            std::normal_distribution<double> gauss(0.0, 1.0);
            std::vector<double> x(static_cast<std::size_t>(2 * dim));
            for (double &c : x) {
                c = gauss(rng);
            }
            return detail::refine_pure_minimum(s, std::move(x));
        });
    double best = std::numeric_limits<double>::infinity();
    for (double v : results) {
        best = std::min(best, v);
    }
    return best;
}

struct WitnessVerdict {
    double total;     ///< sum_i I_rho(M_i)
    double threshold; ///< c_A + c_B
    bool violated;    ///< total < threshold - 1e-9; signals entanglement
};

inline WitnessVerdict lur_witness(const DensityMatrix &rho,
                                  const ObservableSet &as,
                                  const ObservableSet &bs, double c_a,
                                  double c_b) {
    if (as.size() != bs.size()) {
        throw ValidationError("lur_witness: set-size mismatch (" +
                              std::to_string(as.size()) + " vs " +
                              std::to_string(bs.size()) + ")");
    }
    detail::require_same_dim(rho.dim(), as.dim() * bs.dim(), "lur_witness");
    WitnessVerdict v{};
    v.total = 0.0;
    for (std::size_t i = 0; i < as.size(); ++i) {
        v.total += skew_information(rho, sum_observable(as[i], bs[i]));
    }
    v.threshold = c_a + c_b;
    v.violated = v.total < v.threshold - kSatisfactionTol;
    return v;
}

} // namespace wyskew

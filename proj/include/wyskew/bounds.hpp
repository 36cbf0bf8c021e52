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
 * @file bounds.hpp
 * Lower bounds on sums of skew information for a set of observables, the
 * parallelogram identity, and the two-observable weighted relation.
 *
 * Every function takes the state and observables by const reference and
 * returns plain values.
 */
#pragma once

#include <cmath>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skew.hpp"

namespace wyskew {

/// Absolute slack used when deciding whether an inequality is satisfied.
inline constexpr double kSatisfactionTol = 1e-9;

/// A nonempty ordered list of observables of equal dimension.
class ObservableSet {
  public:
    explicit ObservableSet(std::vector<HermitianOperator> ops)
        : ops_(std::move(ops)) {
        if (ops_.empty()) {
            throw ValidationError("ObservableSet: empty set");
        }
        for (const auto &op : ops_) {
            detail::require_same_dim(op.dim(), ops_.front().dim(),
                                     "ObservableSet");
        }
    }

    ObservableSet(std::initializer_list<HermitianOperator> ops)
        : ObservableSet(std::vector<HermitianOperator>(ops)) {}

    [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }
    [[nodiscard]] int dim() const noexcept { return ops_.front().dim(); }
    [[nodiscard]] const HermitianOperator &operator[](std::size_t i) const {
        return ops_[i];
    }
    [[nodiscard]] const std::vector<HermitianOperator> &operators() const {
        return ops_;
    }
    [[nodiscard]] auto begin() const { return ops_.begin(); }
    [[nodiscard]] auto end() const { return ops_.end(); }

  private:
    std::vector<HermitianOperator> ops_;
};

namespace detail {

/// sqrt that treats rounding noise in [-1e-12, 0) as zero.
inline double safe_sqrt(double x) {
    if (x < 0.0 && x >= -1e-12) {
        return 0.0;
    }
    return std::sqrt(x);
}

inline void check_set(const DensityMatrix &rho, const ObservableSet &s,
                      std::size_t min_size, const char *what) {
    if (s.size() < min_size) {
        throw ValidationError(std::string(what) + ": needs at least " +
                              std::to_string(min_size) +
                              " observables, got " + std::to_string(s.size()));
    }
    require_same_dim(rho.dim(), s.dim(), what);
}

inline HermitianOperator sum_of(const ObservableSet &s) {
    HermitianOperator total = HermitianOperator::zero(s.dim());
    for (const auto &op : s) {
        total = total + op;
    }
    return total;
}

/// Skew information of A_i + A_j (sign = +1) or A_i - A_j (sign = -1) for
/// every pair i < j, in lexicographic pair order.
inline std::vector<double> pairwise_skew(const DensityMatrix &rho,
                                         const ObservableSet &s, int sign) {
    std::vector<double> out;
    out.reserve(s.size() * (s.size() - 1) / 2);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            out.push_back(skew_information(
                rho, sign > 0 ? s[i] + s[j] : s[i] - s[j]));
        }
    }
    return out;
}

} // namespace detail

/// Sum_i I_rho(A_i).
inline double sum_skew(const DensityMatrix &rho, const ObservableSet &s) {
    detail::require_same_dim(rho.dim(), s.dim(), "sum_skew");
    double total = 0.0;
    for (const auto &op : s) {
        total += skew_information(rho, op);
    }
    return total;
}

/**
 * Multi-observable lower bound
 *   (1/n) I(sum_i A_i) + (1/n^2) (sum_{i<j} sqrt(I(A_i - A_j)))^2.
 * Requires n >= 2.
 */
inline double theorem1_bound(const DensityMatrix &rho, const ObservableSet &s) {
    detail::check_set(rho, s, 2, "theorem1_bound");
    const double n = static_cast<double>(s.size());
    double root_sum = 0.0;
    for (double v : detail::pairwise_skew(rho, s, -1)) {
        root_sum += detail::safe_sqrt(v);
    }
    return skew_information(rho, detail::sum_of(s)) / n +
           root_sum * root_sum / (n * n);
}

struct CorollaryBound {
    double tight; ///< I(A+B)/2 + I(A-B)/4
    double loose; ///< I(A+B)/2
};

/// Two-observable specialization of theorem1_bound together with its
/// weaker form. For pure states the loose member is the variance-based
/// bound (Delta(A+B))^2 / 2.
inline CorollaryBound corollary_bound(const DensityMatrix &rho,
                                      const HermitianOperator &a,
                                      const HermitianOperator &b) {
    detail::require_same_dim(a.dim(), b.dim(), "corollary_bound");
    detail::require_same_dim(rho.dim(), a.dim(), "corollary_bound");
    const double plus = skew_information(rho, a + b);
    const double minus = skew_information(rho, a - b);
    return {0.5 * plus + 0.25 * minus, 0.5 * plus};
}

/**
 * Competing bound
 *   1/(n-2) [ sum_{i<j} I(A_i+A_j) - (sum_{i<j} sqrt(I(A_i+A_j)))^2/(n-1)^2 ].
 * Undefined for n < 3.
 */
inline double chen_bound(const DensityMatrix &rho, const ObservableSet &s) {
    if (s.size() < 3) {
        throw ValidationError("chen_bound: bound undefined for n < 3 (got n = " +
                              std::to_string(s.size()) + ")");
    }
    detail::check_set(rho, s, 3, "chen_bound");
    const double n = static_cast<double>(s.size());
    double total = 0.0;
    double root_sum = 0.0;
    for (double v : detail::pairwise_skew(rho, s, +1)) {
        total += v;
        root_sum += detail::safe_sqrt(v);
    }
    return (total - root_sum * root_sum / ((n - 1) * (n - 1))) / (n - 2);
}

struct IdentitySides {
    double lhs;
    double rhs;
};

/// I(A) + I(B) against (I(A+B) + I(A-B)) / 2; the two agree exactly.
inline IdentitySides parallelogram_identity(const DensityMatrix &rho,
                                            const HermitianOperator &a,
                                            const HermitianOperator &b) {
    detail::require_same_dim(a.dim(), b.dim(), "parallelogram_identity");
    detail::require_same_dim(rho.dim(), a.dim(), "parallelogram_identity");
    return {skew_information(rho, a) + skew_information(rho, b),
            0.5 * (skew_information(rho, a + b) +
                   skew_information(rho, a - b))};
}

/// (1 / (2(n-1))) sum_{i<j} I(A_i + A_j).
inline double pairwise_sum_bound(const DensityMatrix &rho,
                                 const ObservableSet &s) {
    detail::check_set(rho, s, 2, "pairwise_sum_bound");
    double total = 0.0;
    for (double v : detail::pairwise_skew(rho, s, +1)) {
        total += v;
    }
    return total / (2.0 * (static_cast<double>(s.size()) - 1.0));
}

/// (1 / (2(n-1))) sum_{i<j} I(A_i - A_j).
inline double pairwise_diff_bound(const DensityMatrix &rho,
                                  const ObservableSet &s) {
    detail::check_set(rho, s, 2, "pairwise_diff_bound");
    double total = 0.0;
    for (double v : detail::pairwise_skew(rho, s, -1)) {
        total += v;
    }
    return total / (2.0 * (static_cast<double>(s.size()) - 1.0));
}

struct WeightedRelation {
    double lambda;
    double lower;  ///< I(A-B) + I(((lambda-1)/lambda) A - B)
    double middle; ///< I(A)/lambda + I(B)/(1-lambda)
    double upper;  ///< I(A-B) + I(A - (lambda/(lambda-1)) B)

    [[nodiscard]] bool holds(double tol = kSatisfactionTol) const {
        return lower <= middle + tol && middle <= upper + tol;
    }
};

/**
 * Weighted two-observable relation, lower <= middle <= upper, valid for
 * lambda in [1/2, 1). All three coincide at lambda = 1/2.
 */
inline WeightedRelation weighted_relation(const DensityMatrix &rho,
                                          const HermitianOperator &a,
                                          const HermitianOperator &b,
                                          double lambda) {
    if (!(lambda >= 0.5 && lambda < 1.0)) {
        throw ValidationError("weighted_relation: lambda = " +
                              std::to_string(lambda) +
                              " outside [0.5, 1)");
    }
    detail::require_same_dim(a.dim(), b.dim(), "weighted_relation");
    detail::require_same_dim(rho.dim(), a.dim(), "weighted_relation");
    const double diff = skew_information(rho, a - b);
    WeightedRelation r{};
    r.lambda = lambda;
    r.middle = skew_information(rho, a) / lambda +
               skew_information(rho, b) / (1.0 - lambda);
    r.lower = diff + skew_information(rho, ((lambda - 1.0) / lambda) * a - b);
    r.upper = diff + skew_information(rho, a - (lambda / (lambda - 1.0)) * b);
    return r;
}

/**
 * Every applicable bound on sum_skew for one (state, set) pair.
 *
 * `bounds` holds lower bounds on sum_skew keyed by name; `satisfied`
 * carries the matching sum_skew >= bound - 1e-9 flag. Two-observable sets
 * additionally get the corollary pair and one weighted relation per
 * requested lambda.
 */
struct BoundReport {
    double sum_skew = 0.0;
    std::map<std::string, double> bounds;
    std::map<std::string, bool> satisfied;
    std::vector<WeightedRelation> weighted;

    [[nodiscard]] bool all_satisfied() const {
        for (const auto &[name, ok] : satisfied) {
            if (!ok) {
                return false;
            }
        }
        for (const auto &w : weighted) {
            if (!w.holds()) {
                return false;
            }
        }
        return true;
    }
};

inline BoundReport evaluate_all(const DensityMatrix &rho,
                                const ObservableSet &s,
                                const std::vector<double> &lambdas = {}) {
    BoundReport report;
    report.sum_skew = sum_skew(rho, s);
    auto add = [&](const std::string &name, double value) {
        report.bounds[name] = value;
        report.satisfied[name] = report.sum_skew >= value - kSatisfactionTol;
    };
    if (s.size() >= 2) {
        add("theorem1", theorem1_bound(rho, s));
        add("pairwise_sum", pairwise_sum_bound(rho, s));
        add("pairwise_diff", pairwise_diff_bound(rho, s));
    }
    if (s.size() >= 3) {
        add("chen", chen_bound(rho, s));
    }
    if (s.size() == 2) {
        const auto c = corollary_bound(rho, s[0], s[1]);
        add("corollary_tight", c.tight);
        add("corollary_loose", c.loose);
        for (double lambda : lambdas) {
            report.weighted.push_back(
                weighted_relation(rho, s[0], s[1], lambda));
        }
    }
    return report;
}

} // namespace wyskew

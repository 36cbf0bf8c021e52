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

#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>
#include <system_error>
#include <vector>

#include "catalog.hpp"
#include "parallel.hpp"

namespace wyskew {

/**
 * Shortest decimal that round-trips, capped at 12 significant digits.
 * Locale independent. Integral values keep a trailing ".0" and negative
 * zero prints as "0.0".
 */
inline std::string format_number(double value) {
    if (value == 0.0) {
        return "0.0";
    }
    char buf[64];
    std::string text;
    for (int precision = 1; precision <= 12; ++precision) {
        const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                       std::chars_format::general, precision);
        text.assign(buf, res.ptr);
        double parsed = 0.0;
        std::from_chars(text.data(), text.data() + text.size(), parsed);
        if (parsed == value) {
            break;
        }
    }
    if (text.find_first_of(".eEn") == std::string::npos) {
        text += ".0";
    }
    return text;
}

struct ScanRow {
    double theta;
    double sum_skew;
    double theorem1;
    double chen;
    double pairwise_sum;
    double pairwise_diff;

    /// sum_skew >= every bound - 1e-9.
    [[nodiscard]] bool audit() const {
        for (double b : {theorem1, chen, pairwise_sum, pairwise_diff}) {
            if (sum_skew < b - kSatisfactionTol) {
                return false;
            }
        }
        return true;
    }
};

inline ScanRow scan_point(Family family, double theta) {
    const auto member = figure_family(family, theta);
    const auto &rho = member.rho;
    const auto &s = member.observables;
    return {theta,
            sum_skew(rho, s),
            theorem1_bound(rho, s),
            chen_bound(rho, s),
            pairwise_sum_bound(rho, s),
            pairwise_diff_bound(rho, s)};
}

/// `points` rows at theta_k = 2 pi k / points, k = 0 .. points - 1.
inline std::vector<ScanRow> scan_family(Family family, int points) {
    if (points < 2) {
        throw ValidationError("scan_family: points must be >= 2");
    }
    return detail::parallel_map(
        static_cast<std::size_t>(points), [&](std::size_t k) {
            const double theta = 2.0 * std::numbers::pi *
                                 static_cast<double>(k) /
                                 static_cast<double>(points);
            return scan_point(family, theta);
        });
}

inline constexpr const char *kScanHeader =
    "theta,sum_skew,theorem1,chen,pairwise_sum,pairwise_diff";

inline void write_scan_csv(std::ostream &out, const std::vector<ScanRow> &rows) {
    out << kScanHeader << '\n';
    for (const auto &r : rows) {
        out << format_number(r.theta) << ',' << format_number(r.sum_skew)
            << ',' << format_number(r.theorem1) << ','
            << format_number(r.chen) << ',' << format_number(r.pairwise_sum)
            << ',' << format_number(r.pairwise_diff) << '\n';
    }
}

} // namespace wyskew

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
 * @file matrix_io.hpp
 * JSON matrix documents:
 *
 *     {"dim": d, "re": [[...d rows of d numbers...]], "im": [[...]]}
 *
 * "im" is optional and defaults to zero. Rows must be present and square.
 */
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hermitian.hpp"

namespace wyskew {

namespace detail {

inline void read_part(const nlohmann::json &doc, const char *key, int dim,
                      ComplexMatrix &out, bool imaginary) {
    const auto &rows = doc.at(key);
    if (!rows.is_array()) {
        throw ParseError(std::string("matrix: '") + key + "' is not an array");
    }
    if (rows.size() != static_cast<std::size_t>(dim)) {
        throw ParseError(std::string("matrix: '") + key + "' has " +
                         std::to_string(rows.size()) + " rows, expected " +
                         std::to_string(dim));
    }
    for (int i = 0; i < dim; ++i) {
        const auto &row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
            throw ParseError(std::string("matrix: row ") + std::to_string(i) +
                             " of '" + key + "' is not an array of " +
                             std::to_string(dim) + " numbers");
        }
        for (int j = 0; j < dim; ++j) {
            const auto &v = row[static_cast<std::size_t>(j)];
            if (!v.is_number()) {
                throw ParseError(std::string("matrix: entry (") +
                                 std::to_string(i) + ", " + std::to_string(j) +
                                 ") of '" + key + "' is not a number");
            }
            const double x = v.get<double>();
            if (imaginary) {
                out(i, j).imag(x);
            } else {
                out(i, j).real(x);
            }
        }
    }
}

} // namespace detail

inline ComplexMatrix parse_matrix_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("matrix: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("matrix: document is not a JSON object");
    }
    if (!doc.contains("dim") || !doc.at("dim").is_number_integer()) {
        throw ParseError("matrix: missing integer field 'dim'");
    }
    const auto dim = doc.at("dim").get<long long>();
    if (dim < 1 || dim > kMaxDim) {
        throw ParseError("matrix: 'dim' = " + std::to_string(dim) +
                         " outside [1, " + std::to_string(kMaxDim) + "]");
    }
    if (!doc.contains("re")) {
        throw ParseError("matrix: missing field 're'");
    }
    const int d = static_cast<int>(dim);
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    detail::read_part(doc, "re", d, m, false);
    if (doc.contains("im")) {
        detail::read_part(doc, "im", d, m, true);
    }
    return m;
}

inline ComplexMatrix load_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("matrix: cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_json(buf.str());
}

inline std::string matrix_to_json(const ComplexMatrix &m) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json re_row = nlohmann::json::array();
        nlohmann::json im_row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    nlohmann::json doc = {{"dim", m.rows()}, {"re", re}, {"im", im}};
    return doc.dump();
}

} // namespace wyskew

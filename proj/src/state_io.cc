// Copyright 2026 The qdiscord Authors
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

#include "qdiscord/state_io.h"

#include <fstream>
#include <string>

#include "qdiscord/errors.h"

namespace qdiscord {

DensityMatrix state_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("num_qubits") || !j.contains("matrix")) {
        throw FormatError("state must be an object with 'num_qubits' and 'matrix'");
    }
    const auto &nq = j.at("num_qubits");
    if (!nq.is_number_integer() || nq.get<long long>() < 1 || nq.get<long long>() > 10) {
        throw FormatError("'num_qubits' must be an integer in [1, 10]");
    }
    const int n = nq.get<int>();
    const std::size_t dim = std::size_t{1} << n;
    const auto &rows = j.at("matrix");
    if (!rows.is_array() || rows.size() != dim) {
        throw FormatError("'matrix' must have 2^num_qubits rows");
    }
    const auto d = static_cast<Eigen::Index>(dim);
    ComplexMatrix m(d, d);
    for (std::size_t r = 0; r < dim; ++r) {
        const auto &row = rows[r];
        if (!row.is_array() || row.size() != dim) {
            throw FormatError("row " + std::to_string(r) + " must have 2^num_qubits entries");
        }
        for (std::size_t c = 0; c < dim; ++c) {
            const auto &entry = row[c];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
                throw FormatError("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                  ") must be a [re, im] pair of numbers");
            }
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return DensityMatrix(m);
}

nlohmann::json state_to_json(const DensityMatrix &rho) {
    nlohmann::json rows = nlohmann::json::array();
    const auto d = static_cast<Eigen::Index>(rho.dim());
    for (Eigen::Index r = 0; r < d; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < d; ++c) {
            const Complex z = rho.matrix()(r, c);
            row.push_back({z.real(), z.imag()});
        }
        rows.push_back(std::move(row));
    }
    return {{"num_qubits", rho.num_qubits()}, {"matrix", std::move(rows)}};
}

DensityMatrix load_state_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open state file " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error &e) {
        throw FormatError("state file " + path.string() + " is not valid JSON: " + e.what());
    }
    return state_from_json(j);
}

void save_state_file(const DensityMatrix &rho, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot write state file " + path.string());
    }
    out << state_to_json(rho).dump(1) << '\n';
}

}  // namespace qdiscord

// Copyright 2026 The sympcov Authors
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

#include "sympcov/matrix_io.h"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <sstream>

#include "sympcov/json_writer.h"

namespace sympcov {

namespace {

using nlohmann::json;

const json& require_field(const json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

double as_number(const json& value, const std::string& where) {
    if (!value.is_number()) throw ParseError(where + " must be a number");
    return value.get<double>();
}

std::vector<double> as_number_list(const json& value, const std::string& where, std::size_t n) {
    if (!value.is_array()) throw ParseError(where + " must be an array");
    if (value.size() != n) {
        throw DimensionError(where + " has " + std::to_string(value.size()) + " entries, expected " +
                             std::to_string(n));
    }
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(as_number(value[k], where));
    return out;
}

}  // namespace

OscillatorSystem MatrixFile::oscillator_or_unit() const {
    return oscillator ? *oscillator : OscillatorSystem::unit(n);
}

MatrixFile parse_matrix_file(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("matrix file must be a JSON object");

    MatrixFile file;
    const json& n = require_field(doc, "n");
    if (!n.is_number_integer() || n.get<long long>() < 1) throw ParseError("'n' must be a positive integer");
    file.n = n.get<std::size_t>();

    const json& ordering = require_field(doc, "ordering");
    if (!ordering.is_string()) throw ParseError("'ordering' must be a string");
    try {
        file.ordering = parse_ordering(ordering.get<std::string>());
    } catch (const InvalidArgumentError& e) {
        throw ParseError(e.what());
    }

    const json& data = require_field(doc, "data");
    const std::size_t dim = 2 * file.n;
    if (!data.is_array()) throw ParseError("'data' must be an array of rows");
    if (data.size() != dim) {
        throw DimensionError("'data' has " + std::to_string(data.size()) + " rows, expected " + std::to_string(dim));
    }
    file.data.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        const std::vector<double> row = as_number_list(data[i], "row " + std::to_string(i), dim);
        for (std::size_t j = 0; j < dim; ++j) {
            file.data(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row[j];
        }
    }

    if (const auto it = doc.find("oscillator"); it != doc.end()) {
        const json& osc = *it;
        if (!osc.is_object()) throw ParseError("'oscillator' must be an object");
        const double hbar = osc.contains("hbar") ? as_number(osc["hbar"], "hbar") : 1.0;
        const std::vector<double> masses = osc.contains("masses")
                                               ? as_number_list(osc["masses"], "masses", file.n)
                                               : std::vector<double>(file.n, 1.0);
        const std::vector<double> frequencies = osc.contains("frequencies")
                                                    ? as_number_list(osc["frequencies"], "frequencies", file.n)
                                                    : std::vector<double>(file.n, 1.0);
        file.oscillator.emplace(hbar, masses, frequencies);
    }
    return file;
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix_file(buffer.str());
}

nlohmann::json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const MatrixFile& file) {
    json doc;
    doc["n"] = file.n;
    doc["ordering"] = std::string(to_string(file.ordering));
    doc["data"] = matrix_to_json(file.data);
    if (file.oscillator) {
        doc["oscillator"] = {{"hbar", file.oscillator->hbar()},
                             {"masses", file.oscillator->masses()},
                             {"frequencies", file.oscillator->frequencies()}};
    }
    return doc;
}

std::string write_matrix_file(const MatrixFile& file) { return dump_json(to_json(file)) + "\n"; }

std::string input_digest(const MatrixFile& file) {
    const std::string canonical = dump_json(to_json(file), -1);
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(canonical.data(), canonical.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 digest failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string hex;
    hex.reserve(2 * len);
    for (unsigned int k = 0; k < len; ++k) {
        hex += kHex[md[k] >> 4];
        hex += kHex[md[k] & 0xf];
    }
    return hex;
}

}  // namespace sympcov

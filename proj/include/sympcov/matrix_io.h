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

#ifndef SYMPCOV_MATRIX_IO_H
#define SYMPCOV_MATRIX_IO_H

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "sympcov/covariance.h"
#include "sympcov/errors.h"
#include "sympcov/symplectic.h"

namespace sympcov {

/// Malformed JSON or a field of the wrong type.
class ParseError : public Error {
   public:
    using Error::Error;
};

/// Parsed matrix exchange file:
///
///   {"n": 2, "ordering": "grouped" | "interleaved", "data": [[...], ...],
///    "oscillator": {"hbar": 1.0, "masses": [...], "frequencies": [...]}}
///
/// `data` is row-major 2n x 2n. The oscillator block is optional; missing
/// entries inside it default to hbar = 1, m_j = w_j = 1.
struct MatrixFile {
    std::size_t n = 0;
    Ordering ordering = Ordering::kGrouped;
    Matrix data;
    std::optional<OscillatorSystem> oscillator;

    /// The oscillator block, or the unit system when absent.
    OscillatorSystem oscillator_or_unit() const;
};

MatrixFile parse_matrix_file(std::string_view text);
MatrixFile read_matrix_file(const std::filesystem::path& path);

nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json to_json(const MatrixFile& file);

/// Serializes a matrix file; inverse of parse_matrix_file.
std::string write_matrix_file(const MatrixFile& file);

/// Hex SHA-256 of the canonical serialization of `file`.
std::string input_digest(const MatrixFile& file);

}  // namespace sympcov

#endif  // SYMPCOV_MATRIX_IO_H

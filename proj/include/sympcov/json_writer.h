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

#ifndef SYMPCOV_JSON_WRITER_H
#define SYMPCOV_JSON_WRITER_H

#include <string>

#include "json.hpp"

namespace sympcov {

/// Deterministic JSON text: object keys sorted, floating-point numbers always
/// printed with 17 significant digits in exponent form, non-finite numbers
/// as null. `indent` < 0 gives a single line.
std::string dump_json(const nlohmann::json& value, int indent = 2);

}  // namespace sympcov

#endif  // SYMPCOV_JSON_WRITER_H

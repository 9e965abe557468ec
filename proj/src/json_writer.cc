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

#include "sympcov/json_writer.h"

#include <cmath>
#include <algorithm>
#include <cstdio>

namespace sympcov {

namespace {

void newline(std::string& out, int indent, int depth) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * depth), ' ');
}

void write(const nlohmann::json& value, int indent, int depth, std::string& out) {
    switch (value.type()) {
        case nlohmann::json::value_t::object: {
            if (value.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (const auto& [key, item] : value.items()) {
                if (!first) out += ',';
                first = false;
                newline(out, indent, depth + 1);
                out += nlohmann::json(key).dump();
                out += indent < 0 ? ":" : ": ";
                write(item, indent, depth + 1, out);
            }
            newline(out, indent, depth);
            out += '}';
            return;
        }
        case nlohmann::json::value_t::array: {
            if (value.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line so matrices read row by row.
            const bool flat = std::none_of(value.begin(), value.end(),
                                           [](const auto& v) { return v.is_structured(); });
            out += '[';
            bool first = true;
            for (const auto& item : value) {
                if (!first) out += flat && indent >= 0 ? ", " : ",";
                first = false;
                if (!flat) newline(out, indent, depth + 1);
                write(item, indent, depth + 1, out);
            }
            if (!flat) newline(out, indent, depth);
            out += ']';
            return;
        }
        case nlohmann::json::value_t::number_float: {
            const double x = value.get<double>();
            if (!std::isfinite(x)) {
                out += "null";
                return;
            }
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.16e", x);
            out += buf;
            return;
        }
        default:
            out += value.dump();
    }
}

}  // namespace

std::string dump_json(const nlohmann::json& value, int indent) {
    std::string out;
    write(value, indent, 0, out);
    return out;
}

}  // namespace sympcov

// Copyright 2026 The davoid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace davoid::cli
{

enum class Format
{
    text,
    csv,
    json,
};

/// One output value. monostate renders as an empty cell / JSON null.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Result of one subcommand, renderable in every output format. The JSON form
/// is always {"command", "inputs", "results", "pass"}; table rows appear under
/// results.rows.
struct Report
{
    std::string command;
    std::vector<std::pair<std::string, Cell>> inputs;
    std::vector<std::pair<std::string, Cell>> results;
    std::optional<Table> table;
    bool pass = false;
};

/// Text mode: 10 significant digits.
std::string format_text_number(double value);

/// Shortest representation that reads back to the same double.
std::string format_roundtrip(double value);

std::string render(const Report& report, Format format);

nlohmann::ordered_json to_json(const Report& report);

}  // namespace davoid::cli

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

#include "davoid/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace davoid::cli
{
namespace
{

std::string to_chars_string(double value, std::optional<int> precision)
{
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[64];
    const auto result = precision ? std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, *precision)
                                  : std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

struct CellPrinter
{
    bool text;

    std::string operator()(std::monostate) const { return text ? "-" : ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return text ? format_text_number(v) : format_roundtrip(v); }
    std::string operator()(const std::string& v) const { return text ? v : csv_escape(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }

    static std::string csv_escape(const std::string& v)
    {
        if (v.find_first_of(",\"\n\r") == std::string::npos) return v;
        std::string out = "\"";
        for (char ch : v) {
            if (ch == '"') out += '"';
            out += ch;
        }
        return out + "\"";
    }
};

std::string cell_text(const Cell& cell)
{
    return std::visit(CellPrinter{true}, cell);
}

std::string cell_csv(const Cell& cell)
{
    return std::visit(CellPrinter{false}, cell);
}

nlohmann::ordered_json cell_json(const Cell& cell)
{
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, double>) {
                // JSON has no infinities or NaN.
                if (!std::isfinite(v)) return nullptr;
                return v;
            } else {
                return v;
            }
        },
        cell);
}

std::string render_text(const Report& report)
{
    std::ostringstream out;
    std::size_t width = 4;
    for (const auto& [key, _] : report.inputs) width = std::max(width, key.size());
    for (const auto& [key, _] : report.results) width = std::max(width, key.size());

    out << "# " << report.command << "\n";
    for (const auto& [key, value] : report.inputs) {
        out << key << std::string(width - key.size(), ' ') << " : " << cell_text(value) << "\n";
    }
    out << "--\n";
    for (const auto& [key, value] : report.results) {
        out << key << std::string(width - key.size(), ' ') << " = " << cell_text(value) << "\n";
    }
    if (report.table) {
        const Table& table = *report.table;
        std::vector<std::size_t> widths(table.columns.size());
        std::vector<std::vector<std::string>> cells;
        for (std::size_t i = 0; i < table.columns.size(); ++i) widths[i] = table.columns[i].size();
        for (const auto& row : table.rows) {
            auto& line = cells.emplace_back();
            for (std::size_t i = 0; i < row.size(); ++i) {
                line.push_back(cell_text(row[i]));
                widths[i] = std::max(widths[i], line.back().size());
            }
        }
        auto emit = [&](const std::vector<std::string>& line) {
            for (std::size_t i = 0; i < line.size(); ++i) {
                if (i > 0) out << "  ";
                out << line[i];
                if (i + 1 < line.size()) out << std::string(widths[i] - line[i].size(), ' ');
            }
            out << "\n";
        };
        out << "--\n";
        emit(table.columns);
        for (const auto& line : cells) emit(line);
    }
    out << "pass" << std::string(width - 4, ' ') << " = " << (report.pass ? "true" : "false") << "\n";
    return out.str();
}

std::string render_csv(const Report& report)
{
    std::ostringstream out;
    if (report.table) {
        const Table& table = *report.table;
        for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
        out << "\r\n";
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_csv(row[i]);
            out << "\r\n";
        }
        return out.str();
    }
    out << "key,value\r\n";
    for (const auto& [key, value] : report.results) out << key << "," << cell_csv(value) << "\r\n";
    out << "pass," << (report.pass ? "true" : "false") << "\r\n";
    return out.str();
}

}  // namespace

std::string format_text_number(double value)
{
    return to_chars_string(value, 10);
}

std::string format_roundtrip(double value)
{
    return to_chars_string(value, std::nullopt);
}

nlohmann::ordered_json to_json(const Report& report)
{
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.inputs) inputs[key] = cell_json(value);
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.results) results[key] = cell_json(value);
    if (report.table) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : report.table->rows) {
            nlohmann::ordered_json object = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < row.size(); ++i) object[report.table->columns[i]] = cell_json(row[i]);
            rows.push_back(std::move(object));
        }
        results["rows"] = std::move(rows);
    }
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    doc["command"] = report.command;
    doc["inputs"] = std::move(inputs);
    doc["results"] = std::move(results);
    doc["pass"] = report.pass;
    return doc;
}

std::string render(const Report& report, Format format)
{
    switch (format) {
        case Format::text: return render_text(report);
        case Format::csv: return render_csv(report);
        case Format::json: return to_json(report).dump(2) + "\n";
    }
    return {};
}

}  // namespace davoid::cli

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

// Minimal XML reader for test assertions: checks nesting, quoting and a
// single root, and collects every element with its attributes.

#include <cctype>
#include <map>
#include <string>
#include <vector>

namespace davoid::testing
{

struct XmlElement
{
    std::string name;
    std::map<std::string, std::string> attributes;
};

struct XmlDocument
{
    bool well_formed = false;
    std::string error;
    std::vector<XmlElement> elements;

    std::vector<XmlElement> named(const std::string& name) const
    {
        std::vector<XmlElement> out;
        for (const XmlElement& e : elements) {
            if (e.name == name) out.push_back(e);
        }
        return out;
    }
};

inline XmlDocument parse_xml(const std::string& text)
{
    XmlDocument doc;
    std::vector<std::string> stack;
    int roots = 0;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        doc.well_formed = false;
        doc.error = why + " at offset " + std::to_string(i);
        return doc;
    };
    auto is_name_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' || c == '.';
    };

    while (i < text.size()) {
        if (text[i] != '<') {
            if (stack.empty() && !std::isspace(static_cast<unsigned char>(text[i]))) return fail("text outside root");
            if (text[i] == '>') return fail("stray '>'");
            ++i;
            continue;
        }
        if (text.compare(i, 4, "<!--") == 0) {
            const std::size_t end = text.find("-->", i + 4);
            if (end == std::string::npos) return fail("unterminated comment");
            i = end + 3;
            continue;
        }
        if (text.compare(i, 2, "<?") == 0) {
            const std::size_t end = text.find("?>", i + 2);
            if (end == std::string::npos) return fail("unterminated declaration");
            i = end + 2;
            continue;
        }
        const bool closing = i + 1 < text.size() && text[i + 1] == '/';
        std::size_t j = i + (closing ? 2 : 1);
        const std::size_t name_start = j;
        while (j < text.size() && is_name_char(text[j])) ++j;
        const std::string name = text.substr(name_start, j - name_start);
        if (name.empty()) return fail("missing tag name");

        if (closing) {
            while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
            if (j >= text.size() || text[j] != '>') return fail("malformed end tag");
            if (stack.empty() || stack.back() != name) return fail("mismatched </" + name + ">");
            stack.pop_back();
            i = j + 1;
            continue;
        }

        XmlElement element{name, {}};
        bool self_closing = false;
        while (true) {
            while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
            if (j >= text.size()) return fail("unterminated tag");
            if (text[j] == '>') {
                ++j;
                break;
            }
            if (text.compare(j, 2, "/>") == 0) {
                self_closing = true;
                j += 2;
                break;
            }
            const std::size_t attr_start = j;
            while (j < text.size() && is_name_char(text[j])) ++j;
            const std::string attr = text.substr(attr_start, j - attr_start);
            if (attr.empty() || j >= text.size() || text[j] != '=') return fail("malformed attribute");
            ++j;
            if (j >= text.size() || (text[j] != '"' && text[j] != '\'')) return fail("unquoted attribute");
            const char quote = text[j];
            const std::size_t end = text.find(quote, j + 1);
            if (end == std::string::npos) return fail("unterminated attribute value");
            const std::string value = text.substr(j + 1, end - j - 1);
            if (value.find('<') != std::string::npos) return fail("'<' in attribute value");
            if (!element.attributes.emplace(attr, value).second) return fail("duplicate attribute " + attr);
            j = end + 1;
        }
        if (stack.empty()) ++roots;
        if (roots > 1) return fail("more than one root element");
        doc.elements.push_back(std::move(element));
        if (!self_closing) stack.push_back(name);
        i = j;
    }
    if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
    if (roots != 1) return fail("no root element");
    doc.well_formed = true;
    return doc;
}

}  // namespace davoid::testing

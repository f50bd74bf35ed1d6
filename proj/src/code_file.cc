// Copyright 2026 The qclean Authors
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

#include "qclean/code_file.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace qclean {

namespace {

struct Line {
    std::size_t number;
    std::size_t indent;  // column of the first significant character, 0-based
    std::string_view text;
};

/// Non-empty lines with comments and surrounding whitespace removed.
std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        number++;
        auto end = text.find('\n');
        std::string_view line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        out.push_back({number, first, line.substr(first, last - first + 1)});
    }
    return out;
}

BitVector parse_row(const Line &line, std::size_t width) {
    if (line.text.size() != width) {
        throw ParseError(line.number, line.indent + 1,
                         "row has " + std::to_string(line.text.size()) + " entries, expected " + std::to_string(width));
    }
    BitVector v(width);
    for (std::size_t i = 0; i < width; i++) {
        const char ch = line.text[i];
        if (ch == '1') {
            v.set(i);
        } else if (ch != '0') {
            throw ParseError(line.number, line.indent + i + 1, std::string("unexpected character '") + ch + "'");
        }
    }
    return v;
}

struct Header {
    std::string kind;
    std::size_t n;
};

Header parse_header(const Line &line) {
    const auto space = line.text.find_first_of(" \t");
    const std::string kind(line.text.substr(0, space));
    if (kind != "CSS" && kind != "STAB" && kind != "GAUGE") {
        throw ParseError(line.number, line.indent + 1, "expected CSS, STAB or GAUGE header, got '" + kind + "'");
    }
    if (space == std::string_view::npos) throw ParseError(line.number, line.indent + line.text.size() + 1, "missing n=<n>");
    auto rest = line.text.substr(space);
    const auto start = rest.find_first_not_of(" \t");
    const std::size_t col = line.indent + space + start + 1;
    rest = rest.substr(start);
    if (rest.substr(0, 2) != "n=") throw ParseError(line.number, col, "expected n=<n>");
    std::size_t n = 0;
    const auto digits = rest.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || digits.empty()) throw ParseError(line.number, col + 2, "expected a qubit count");
    if (ptr != digits.data() + digits.size()) {
        throw ParseError(line.number, col + 2 + (ptr - digits.data()), "unexpected text after qubit count");
    }
    return {kind, n};
}

}  // namespace

AnyCode parse_code_file(std::string_view text) {
    const auto lines = significant_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty code file");
    const auto header = parse_header(lines[0]);
    const std::size_t n = header.n;

    if (header.kind == "CSS") {
        std::optional<BitMatrix> hx, hz;
        std::optional<BitMatrix> *current = nullptr;
        for (std::size_t i = 1; i < lines.size(); i++) {
            const auto &line = lines[i];
            if (line.text == "HX:" || line.text == "HZ:") {
                current = line.text == "HX:" ? &hx : &hz;
                if (current->has_value()) {
                    throw ParseError(line.number, line.indent + 1, "duplicate " + std::string(line.text) + " section");
                }
                current->emplace(0, n);
                continue;
            }
            if (current == nullptr) throw ParseError(line.number, line.indent + 1, "expected HX: or HZ: section");
            (*current)->append_row(parse_row(line, n));
        }
        const std::size_t end_line = lines.back().number;
        if (!hx) throw ParseError(end_line, 1, "missing HX: section");
        if (!hz) throw ParseError(end_line, 1, "missing HZ: section");
        return CssCode(std::move(*hx), std::move(*hz));
    }

    BitMatrix rows(0, 2 * n);
    for (std::size_t i = 1; i < lines.size(); i++) rows.append_row(parse_row(lines[i], 2 * n));
    if (header.kind == "STAB") return StabilizerCode::from_generators(n, rows);
    return SubsystemCode::from_generators(n, rows);
}

AnyCode load_code_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, 0, "cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_code_file(buffer.str());
}

namespace {

void write_rows(std::ostringstream &out, const BitMatrix &m) {
    for (std::size_t r = 0; r < m.rows(); r++) out << m.row(r).to_string() << '\n';
}

}  // namespace

std::string serialize(const CssCode &c) {
    std::ostringstream out;
    out << "CSS n=" << c.n() << "\nHX:\n";
    write_rows(out, c.hx());
    out << "HZ:\n";
    write_rows(out, c.hz());
    return out.str();
}

std::string serialize(const StabilizerCode &c) {
    std::ostringstream out;
    out << "STAB n=" << c.n() << '\n';
    write_rows(out, c.generators());
    return out.str();
}

std::string serialize(const SubsystemCode &c) {
    std::ostringstream out;
    out << "GAUGE n=" << c.n() << '\n';
    write_rows(out, c.generators());
    return out.str();
}

std::string serialize(const AnyCode &c) {
    return std::visit([](const auto &code) { return serialize(code); }, c);
}

}  // namespace qclean

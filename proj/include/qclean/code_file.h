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

#pragma once

// Text format for codes. One header line, then rows of '0'/'1':
//
//   CSS n=<n>        followed by an "HX:" section and an "HZ:" section
//   STAB n=<n>       rows of 2n characters, x block then z block
//   GAUGE n=<n>      same layout as STAB; rows generate the gauge group
//
// Blank lines are ignored and '#' starts a comment that runs to end of line.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "qclean/codes.h"

namespace qclean {

using AnyCode = std::variant<CssCode, StabilizerCode, SubsystemCode>;

/// Malformed text. line and column are 1-based.
class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::size_t column, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

   private:
    std::size_t line_, column_;
};

/// Parses and validates. Throws ParseError for syntax problems and the code
/// constructors' exceptions (e.g. InvariantViolation) for invalid codes.
AnyCode parse_code_file(std::string_view text);
/// Reads a file and parses it; an unreadable file is a ParseError at 0:0.
AnyCode load_code_file(const std::string &path);

std::string serialize(const CssCode &c);
std::string serialize(const StabilizerCode &c);
std::string serialize(const SubsystemCode &c);
std::string serialize(const AnyCode &c);

}  // namespace qclean

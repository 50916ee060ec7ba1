// Copyright 2026 The QPU Emulator Authors
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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpu/core/error.hpp"
#include "qpu/isa/instruction.hpp"

namespace qpu {

struct Diagnostic {
    std::size_t line = 0;  // 1-based
    std::string message;
};

class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Result of parsing program text; `program` is set only when there are no
/// diagnostics.
struct ParsedProgram {
    std::optional<QuantumProgram> program;
    std::vector<Diagnostic> diagnostics;
    /// Source line of each instruction.
    std::vector<std::size_t> lines;
};

/// Parses the physical program format:
///
///     QPU s=<int>
///     INIT m<k> <0|1>      LOAD m<k> c<j>       SAVE c<j> m<k>
///     QET <theta> [t<id>]  PHASE <theta> <phi> [t<id>]
///     CQET [t<id>]         MEASURE m<k>
///
/// Opcodes are case-insensitive, `#` starts a comment, angles are decimal radians.
ParsedProgram parse_program_text(std::string_view text);

/// Like parse_program_text but throws ParseError on the first diagnostic.
QuantumProgram parse_program(std::string_view text);

std::string format_program(const QuantumProgram& program);

namespace text {

/// Whitespace-separated tokens of `line` with any `#` comment removed.
std::vector<std::string_view> tokenize(std::string_view line);

std::vector<std::string_view> split_lines(std::string_view text);

std::optional<double> parse_real(std::string_view token);
std::optional<std::size_t> parse_index(std::string_view token);

/// Parses `<prefix><digits>`, e.g. "m3" with prefix 'm'. Case-insensitive prefix.
std::optional<std::size_t> parse_prefixed(std::string_view token, char prefix);

/// Parses a `KEY s=<int>`-style header token pair.
std::optional<std::size_t> parse_header(const std::vector<std::string_view>& tokens,
                                        std::string_view keyword, std::string_view field);

std::string format_real(double value);

bool iequals(std::string_view a, std::string_view b);

}  // namespace text

}  // namespace qpu

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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpu/isa/program_text.hpp"
#include "qpu/logical/compiler.hpp"

namespace qpu::logical {

struct ParsedLogicalProgram {
    std::optional<LogicalProgram> program;
    std::vector<Diagnostic> diagnostics;
};

/// Parses the logical program format:
///
///     LQ n=<int>
///     RX <theta> q<i>    RZ <theta> q<i>    CNOT q<i> q<j>
///     SU2 q<i> <re00 im00 re01 im01 re10 im10 re11 im11>
///     MEASURE q<i>
ParsedLogicalProgram parse_logical_text(std::string_view text);

/// Throws ParseError on the first diagnostic.
LogicalProgram parse_logical_program(std::string_view text);

std::string format_logical_program(const LogicalProgram& program);

/// True if the first non-comment line is an `LQ` header.
bool looks_logical(std::string_view text);

}  // namespace qpu::logical

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

#include "qpu/isa/program_text.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

namespace qpu {

namespace text {

std::vector<std::string_view> split_lines(std::string_view src) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= src.size()) {
        std::size_t end = src.find('\n', start);
        if (end == std::string_view::npos) {
            end = src.size();
        }
        std::string_view line = src.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        if (end == src.size()) {
            break;
        }
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> tokenize(std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

std::optional<double> parse_real(std::string_view token) {
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    double value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

std::optional<std::size_t> parse_index(std::string_view token) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

std::optional<std::size_t> parse_prefixed(std::string_view token, char prefix) {
    if (token.size() < 2 ||
        std::tolower(static_cast<unsigned char>(token.front())) != std::tolower(prefix)) {
        return std::nullopt;
    }
    return parse_index(token.substr(1));
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i]))) {
            return false;
        }
    }
    return true;
}

std::optional<std::size_t> parse_header(const std::vector<std::string_view>& tokens,
                                        std::string_view keyword, std::string_view field) {
    if (tokens.size() != 2 || !iequals(tokens[0], keyword)) {
        return std::nullopt;
    }
    const std::string_view assignment = tokens[1];
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || !iequals(assignment.substr(0, eq), field)) {
        return std::nullopt;
    }
    return parse_index(assignment.substr(eq + 1));
}

std::string format_real(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), end);
}

}  // namespace text

namespace {

using Tokens = std::vector<std::string_view>;

struct LineParser {
    const Tokens& tokens;
    std::vector<std::string>& errors;
    std::size_t pos = 1;

    bool more() const { return pos < tokens.size(); }

    std::optional<std::size_t> slot() {
        if (!more()) {
            errors.emplace_back("missing parameter: memory address");
            return std::nullopt;
        }
        auto v = text::parse_prefixed(tokens[pos], 'm');
        if (!v) {
            errors.emplace_back("expected memory address m<k>, got '" + std::string(tokens[pos]) + "'");
        }
        ++pos;
        return v;
    }

    std::optional<std::size_t> cell() {
        if (!more()) {
            errors.emplace_back("missing parameter: transistor cell");
            return std::nullopt;
        }
        auto v = text::parse_prefixed(tokens[pos], 'c');
        if (!v) {
            errors.emplace_back("expected transistor cell c<j>, got '" + std::string(tokens[pos]) + "'");
        }
        ++pos;
        return v;
    }

    std::optional<double> angle(const char* name) {
        if (!more() || text::parse_prefixed(tokens[pos], 't')) {
            errors.emplace_back(std::string("missing parameter: ") + name);
            return std::nullopt;
        }
        auto v = text::parse_real(tokens[pos]);
        if (!v) {
            errors.emplace_back(std::string("invalid ") + name + " '" + std::string(tokens[pos]) + "'");
        }
        ++pos;
        return v;
    }

    std::size_t transistor() {
        if (!more()) {
            return 0;
        }
        auto v = text::parse_prefixed(tokens[pos], 't');
        if (!v) {
            errors.emplace_back("expected transistor id t<id>, got '" + std::string(tokens[pos]) + "'");
            ++pos;
            return 0;
        }
        ++pos;
        return *v;
    }

    void finish() {
        if (more()) {
            errors.emplace_back("unexpected token '" + std::string(tokens[pos]) + "'");
        }
    }
};

std::optional<Instruction> parse_instruction(const Tokens& tokens, std::vector<std::string>& errors) {
    const auto opcode = parse_opcode(tokens[0]);
    if (!opcode) {
        errors.emplace_back("unknown opcode '" + std::string(tokens[0]) + "'");
        return std::nullopt;
    }
    LineParser p{tokens, errors};
    Instruction instr;
    instr.opcode = *opcode;
    switch (*opcode) {
        case Opcode::Init: {
            instr.memory_addr = p.slot();
            instr.init_value = 0;
            if (p.more()) {
                const std::string_view bit = tokens[p.pos++];
                if (bit == "0" || bit == "1") {
                    instr.init_value = bit == "1" ? 1 : 0;
                } else {
                    errors.emplace_back("init value must be 0 or 1, got '" + std::string(bit) + "'");
                }
            }
            break;
        }
        case Opcode::Load:
            instr.memory_addr = p.slot();
            instr.cell = p.cell();
            break;
        case Opcode::Save:
            instr.cell = p.cell();
            instr.memory_addr = p.slot();
            break;
        case Opcode::Qet:
            instr.theta = p.angle("theta");
            instr.transistor_id = p.transistor();
            break;
        case Opcode::Phase:
            instr.theta = p.angle("theta");
            if (instr.theta) {
                instr.phi = p.angle("phi");
            }
            instr.transistor_id = p.transistor();
            break;
        case Opcode::Cqet:
            instr.transistor_id = p.transistor();
            break;
        case Opcode::Measure:
            instr.memory_addr = p.slot();
            break;
    }
    p.finish();
    if (!errors.empty()) {
        return std::nullopt;
    }
    return instr;
}

}  // namespace

ParsedProgram parse_program_text(std::string_view src) {
    ParsedProgram out;
    QuantumProgram program;
    bool have_header = false;
    const auto lines = text::split_lines(src);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const std::size_t line_no = n + 1;
        const Tokens tokens = text::tokenize(lines[n]);
        if (tokens.empty()) {
            continue;
        }
        if (!have_header) {
            have_header = true;
            if (auto s = text::parse_header(tokens, "QPU", "s")) {
                program.memory_size = *s;
                continue;
            }
            out.diagnostics.push_back({line_no, "missing header 'QPU s=<int>'"});
            if (text::iequals(tokens[0], "QPU")) {
                continue;
            }
        }
        std::vector<std::string> errors;
        if (auto instr = parse_instruction(tokens, errors)) {
            program.instructions.push_back(*instr);
            out.lines.push_back(line_no);
        }
        for (auto& e : errors) {
            out.diagnostics.push_back({line_no, std::move(e)});
        }
    }
    if (!have_header) {
        out.diagnostics.push_back({1, "missing header 'QPU s=<int>'"});
    }
    if (out.diagnostics.empty()) {
        out.program = std::move(program);
    }
    return out;
}

QuantumProgram parse_program(std::string_view src) {
    ParsedProgram parsed = parse_program_text(src);
    if (!parsed.diagnostics.empty()) {
        throw ParseError(parsed.diagnostics.front().line, parsed.diagnostics.front().message);
    }
    return std::move(*parsed.program);
}

std::string format_program(const QuantumProgram& program) {
    std::string out = "QPU s=" + std::to_string(program.memory_size) + "\n";
    for (const Instruction& instr : program.instructions) {
        out += to_string(instr);
        out += '\n';
    }
    return out;
}

}  // namespace qpu

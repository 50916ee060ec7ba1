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


#include "qpu/logical/logical_text.hpp"

#include <set>

namespace qpu::logical {
namespace {

using Tokens = std::vector<std::string_view>;

std::optional<std::size_t> qubit(const Tokens& tokens, std::size_t pos, std::vector<std::string>& errors) {
    if (pos >= tokens.size()) {
        errors.emplace_back("missing parameter: qubit");
        return std::nullopt;
    }
    auto q = text::parse_prefixed(tokens[pos], 'q');
    if (!q) {
        errors.emplace_back("expected qubit q<i>, got '" + std::string(tokens[pos]) + "'");
    }
    return q;
}

std::optional<double> real(const Tokens& tokens, std::size_t pos, const char* name, std::vector<std::string>& errors) {
    if (pos >= tokens.size()) {
        errors.emplace_back(std::string("missing parameter: ") + name);
        return std::nullopt;
    }
    auto v = text::parse_real(tokens[pos]);
    if (!v) {
        errors.emplace_back(std::string("invalid ") + name + " '" + std::string(tokens[pos]) + "'");
    }
    return v;
}

void expect_count(const Tokens& tokens, std::size_t count, std::vector<std::string>& errors) {
    if (tokens.size() > count) {
        errors.emplace_back("unexpected token '" + std::string(tokens[count]) + "'");
    }
}

}  // namespace

ParsedLogicalProgram parse_logical_text(std::string_view source) {
    ParsedLogicalProgram result;
    LogicalProgram program;
    bool have_header = false;
    std::set<std::size_t> measured;
    const auto lines = text::split_lines(source);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const auto tokens = text::tokenize(lines[n]);
        if (tokens.empty()) {
            continue;
        }
        std::vector<std::string> errors;
        const auto report = [&] {
            for (auto& e : errors) {
                result.diagnostics.push_back({n + 1, std::move(e)});
            }
        };
        if (!have_header) {
            const auto count = text::parse_header(tokens, "LQ", "n");
            if (!count) {
                result.diagnostics.push_back({n + 1, "missing header 'LQ n=<int>'"});
                return result;
            }
            program.qubit_count = *count;
            have_header = true;
            continue;
        }
        const std::string_view op = tokens[0];
        std::optional<LogicalGate> gate;
        if (text::iequals(op, "RX") || text::iequals(op, "RZ")) {
            const auto theta = real(tokens, 1, "theta", errors);
            const auto q = qubit(tokens, 2, errors);
            expect_count(tokens, 3, errors);
            if (theta && q) {
                gate = text::iequals(op, "RX") ? LogicalGate::rx(*q, *theta) : LogicalGate::rz(*q, *theta);
            }
        } else if (text::iequals(op, "CNOT")) {
            const auto c = qubit(tokens, 1, errors);
            const auto t = qubit(tokens, 2, errors);
            expect_count(tokens, 3, errors);
            if (c && t) {
                gate = LogicalGate::cnot(*c, *t);
            }
        } else if (text::iequals(op, "SU2")) {
            const auto q = qubit(tokens, 1, errors);
            Eigen::Matrix2cd u;
            bool ok = q.has_value();
            for (std::size_t e = 0; e < 4; ++e) {
                const auto re = real(tokens, 2 + 2 * e, "matrix entry", errors);
                const auto im = real(tokens, 3 + 2 * e, "matrix entry", errors);
                ok = ok && re && im;
                if (re && im) {
                    u(static_cast<Eigen::Index>(e / 2), static_cast<Eigen::Index>(e % 2)) = {*re, *im};
                }
                if (!re || !im) {
                    break;
                }
            }
            expect_count(tokens, 10, errors);
            if (ok) {
                gate = LogicalGate::su2(*q, u);
            }
        } else if (text::iequals(op, "MEASURE")) {
            const auto q = qubit(tokens, 1, errors);
            expect_count(tokens, 2, errors);
            if (q) {
                if (*q >= program.qubit_count) {
                    errors.emplace_back("q" + std::to_string(*q) + " out of range (n=" +
                                        std::to_string(program.qubit_count) + ")");
                } else if (!measured.insert(*q).second) {
                    errors.emplace_back("q" + std::to_string(*q) + " measured twice");
                }
                program.measured.push_back(*q);
            }
        } else {
            errors.emplace_back("unknown operation '" + std::string(op) + "'");
        }
        if (gate) {
            for (const auto q : gate->qubits) {
                if (q >= program.qubit_count) {
                    errors.emplace_back("q" + std::to_string(q) + " out of range (n=" +
                                        std::to_string(program.qubit_count) + ")");
                } else if (measured.contains(q)) {
                    errors.emplace_back("gate on q" + std::to_string(q) + " after its MEASURE");
                }
            }
            if (errors.empty()) {
                const auto issues = validate_logical_program({program.qubit_count, {*gate}, {}});
                for (const auto& issue : issues) {
                    errors.push_back(issue.substr(issue.find(": ") + 2));
                }
            }
            program.gates.push_back(std::move(*gate));
        }
        report();
    }
    if (!have_header) {
        result.diagnostics.push_back({1, "missing header 'LQ n=<int>'"});
    }
    if (result.diagnostics.empty()) {
        result.program = std::move(program);
    }
    return result;
}

LogicalProgram parse_logical_program(std::string_view source) {
    auto parsed = parse_logical_text(source);
    if (!parsed.program) {
        const auto& d = parsed.diagnostics.front();
        throw ParseError(d.line, d.message);
    }
    return std::move(*parsed.program);
}

std::string format_logical_program(const LogicalProgram& program) {
    std::string out = "LQ n=" + std::to_string(program.qubit_count) + "\n";
    const auto q = [](std::size_t i) { return " q" + std::to_string(i); };
    for (const auto& g : program.gates) {
        switch (g.kind) {
            case GateKind::RX:
                out += "RX " + text::format_real(g.theta) + q(g.qubits[0]);
                break;
            case GateKind::RZ:
                out += "RZ " + text::format_real(g.theta) + q(g.qubits[0]);
                break;
            case GateKind::CNOT:
                out += "CNOT" + q(g.qubits[0]) + q(g.qubits[1]);
                break;
            case GateKind::SU2:
                out += "SU2" + q(g.qubits[0]);
                for (Eigen::Index r = 0; r < 2; ++r) {
                    for (Eigen::Index c = 0; c < 2; ++c) {
                        out += " " + text::format_real(g.matrix(r, c).real()) + " " +
                               text::format_real(g.matrix(r, c).imag());
                    }
                }
                break;
        }
        out += "\n";
    }
    for (const auto m : program.measured) {
        out += "MEASURE" + q(m) + "\n";
    }
    return out;
}

bool looks_logical(std::string_view source) {
    for (const auto line : text::split_lines(source)) {
        const auto tokens = text::tokenize(line);
        if (!tokens.empty()) {
            return text::iequals(tokens[0], "LQ");
        }
    }
    return false;
}

}  // namespace qpu::logical

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

namespace qpu {

enum class Opcode { Init, Load, Save, Qet, Phase, Cqet, Measure };

std::string_view opcode_name(Opcode op);
std::optional<Opcode> parse_opcode(std::string_view name);

/// Number of cells of the quantum transistor.
inline constexpr std::size_t kTransistorCells = 3;

/// One QPU instruction. Only the operands meaningful for the opcode are set.
struct Instruction {
    Opcode opcode = Opcode::Init;
    std::optional<std::size_t> memory_addr;   // INIT, LOAD, SAVE, MEASURE
    std::optional<std::size_t> cell;          // LOAD, SAVE
    std::optional<double> theta;              // QET, PHASE
    std::optional<double> phi;                // PHASE
    std::optional<std::size_t> transistor_id; // QET, PHASE, CQET
    std::optional<int> init_value;            // INIT

    static Instruction init(std::size_t addr, int bit = 0);
    static Instruction load(std::size_t addr, std::size_t cell);
    static Instruction save(std::size_t cell, std::size_t addr);
    static Instruction qet(double theta, std::size_t transistor = 0);
    static Instruction phase(double theta, double phi, std::size_t transistor = 0);
    static Instruction cqet(std::size_t transistor = 0);
    static Instruction measure(std::size_t addr);

    friend bool operator==(const Instruction&, const Instruction&) = default;
};

/// A (t, s) program: t = instructions.size(), s = memory_size.
struct QuantumProgram {
    std::size_t memory_size = 0;
    std::vector<Instruction> instructions;

    friend bool operator==(const QuantumProgram&, const QuantumProgram&) = default;
};

/// Human-readable rendering in program-text syntax.
std::string to_string(const Instruction& instr);

}  // namespace qpu

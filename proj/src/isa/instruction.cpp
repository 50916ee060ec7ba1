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

#include "qpu/isa/instruction.hpp"

#include "qpu/isa/program_text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

namespace qpu {

namespace {

constexpr std::array<std::pair<Opcode, std::string_view>, 7> kOpcodeNames{{
    {Opcode::Init, "INIT"},
    {Opcode::Load, "LOAD"},
    {Opcode::Save, "SAVE"},
    {Opcode::Qet, "QET"},
    {Opcode::Phase, "PHASE"},
    {Opcode::Cqet, "CQET"},
    {Opcode::Measure, "MEASURE"},
}};

std::string transistor_suffix(const Instruction& instr) {
    if (instr.transistor_id && *instr.transistor_id != 0) {
        return " t" + std::to_string(*instr.transistor_id);
    }
    return {};
}

std::string slot(const std::optional<std::size_t>& addr) {
    return addr ? "m" + std::to_string(*addr) : "m?";
}

std::string cell(const std::optional<std::size_t>& c) {
    return c ? "c" + std::to_string(*c) : "c?";
}

std::string real_or_missing(const std::optional<double>& v) {
    return v ? text::format_real(*v) : "?";
}

}  // namespace

std::string_view opcode_name(Opcode op) {
    for (const auto& [code, name] : kOpcodeNames) {
        if (code == op) {
            return name;
        }
    }
    return "?";
}

std::optional<Opcode> parse_opcode(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (const auto& [code, n] : kOpcodeNames) {
        if (n == upper) {
            return code;
        }
    }
    return std::nullopt;
}

Instruction Instruction::init(std::size_t addr, int bit) {
    Instruction i;
    i.opcode = Opcode::Init;
    i.memory_addr = addr;
    i.init_value = bit;
    return i;
}

Instruction Instruction::load(std::size_t addr, std::size_t c) {
    Instruction i;
    i.opcode = Opcode::Load;
    i.memory_addr = addr;
    i.cell = c;
    return i;
}

Instruction Instruction::save(std::size_t c, std::size_t addr) {
    Instruction i;
    i.opcode = Opcode::Save;
    i.memory_addr = addr;
    i.cell = c;
    return i;
}

Instruction Instruction::qet(double theta, std::size_t transistor) {
    Instruction i;
    i.opcode = Opcode::Qet;
    i.theta = theta;
    i.transistor_id = transistor;
    return i;
}

Instruction Instruction::phase(double theta, double phi, std::size_t transistor) {
    Instruction i;
    i.opcode = Opcode::Phase;
    i.theta = theta;
    i.phi = phi;
    i.transistor_id = transistor;
    return i;
}

Instruction Instruction::cqet(std::size_t transistor) {
    Instruction i;
    i.opcode = Opcode::Cqet;
    i.transistor_id = transistor;
    return i;
}

Instruction Instruction::measure(std::size_t addr) {
    Instruction i;
    i.opcode = Opcode::Measure;
    i.memory_addr = addr;
    return i;
}

std::string to_string(const Instruction& instr) {
    const std::string name(opcode_name(instr.opcode));
    switch (instr.opcode) {
        case Opcode::Init:
            return name + " " + slot(instr.memory_addr) + " " +
                   (instr.init_value ? std::to_string(*instr.init_value) : "?");
        case Opcode::Load:
            return name + " " + slot(instr.memory_addr) + " " + cell(instr.cell);
        case Opcode::Save:
            return name + " " + cell(instr.cell) + " " + slot(instr.memory_addr);
        case Opcode::Qet:
            return name + " " + real_or_missing(instr.theta) + transistor_suffix(instr);
        case Opcode::Phase:
            return name + " " + real_or_missing(instr.theta) + " " + real_or_missing(instr.phi) +
                   transistor_suffix(instr);
        case Opcode::Cqet:
            return name + transistor_suffix(instr);
        case Opcode::Measure:
            return name + " " + slot(instr.memory_addr);
    }
    return name;
}

}  // namespace qpu

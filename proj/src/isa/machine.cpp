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

#include "qpu/isa/machine.hpp"

#include <cmath>
#include <utility>

#include "qpu/core/operations.hpp"
#include "qpu/isa/gates.hpp"

namespace qpu {

namespace {

constexpr std::size_t kPairCells[] = {1, 2};

std::string with_index(std::size_t index, Opcode opcode, const std::string& condition) {
    return "instruction " + std::to_string(index) + " (" + std::string(opcode_name(opcode)) +
           "): " + condition;
}

void require_address(const Instruction& instr, const Occupancy& occ,
                     std::vector<std::string>& problems) {
    if (!instr.memory_addr) {
        problems.emplace_back("missing parameter: memory address");
    } else if (*instr.memory_addr >= occ.memory.size()) {
        problems.emplace_back("address out of range: m" + std::to_string(*instr.memory_addr) +
                              " (memory size " + std::to_string(occ.memory.size()) + ")");
    }
}

void require_cell(const Instruction& instr, std::vector<std::string>& problems) {
    if (!instr.cell) {
        problems.emplace_back("missing parameter: transistor cell");
    } else if (*instr.cell >= kTransistorCells) {
        problems.emplace_back("cell out of range: c" + std::to_string(*instr.cell));
    }
}

void require_angle(const std::optional<double>& value, const char* name,
                   std::vector<std::string>& problems) {
    if (!value) {
        problems.emplace_back(std::string("missing parameter: ") + name);
    } else if (!std::isfinite(*value)) {
        problems.emplace_back(std::string("non-finite ") + name);
    }
}

void require_transistor(const Instruction& instr, std::size_t transistor_count,
                        std::vector<std::string>& problems) {
    const std::size_t id = instr.transistor_id.value_or(0);
    if (id >= transistor_count) {
        problems.emplace_back("unknown transistor t" + std::to_string(id));
    }
}

void reject_unexpected(const Instruction& instr, bool addr, bool cell, bool theta, bool phi,
                       bool transistor, bool init, std::vector<std::string>& problems) {
    if ((instr.memory_addr && !addr) || (instr.cell && !cell) || (instr.theta && !theta) ||
        (instr.phi && !phi) || (instr.transistor_id && !transistor) ||
        (instr.init_value && !init)) {
        problems.emplace_back("unexpected operand for " + std::string(opcode_name(instr.opcode)));
    }
}

bool slot_in_range(const Instruction& instr, const Occupancy& occ) {
    return instr.memory_addr && *instr.memory_addr < occ.memory.size();
}

bool cell_in_range(const Instruction& instr) {
    return instr.cell && *instr.cell < kTransistorCells;
}

StateVector flip(const StateVector& reg, std::size_t qubit) {
    return apply_local(reg, pauli_x(), {qubit});
}

}  // namespace

ExecutionError::ExecutionError(std::size_t index, Opcode opcode, std::string condition)
    : Error(with_index(index, opcode, condition)),
      index_(index),
      opcode_(opcode),
      condition_(std::move(condition)) {}

MachineState MachineState::fresh(std::size_t memory_size) {
    if (memory_size > kMaxMemoryQubits) {
        throw DimensionError("memory of " + std::to_string(memory_size) +
                             " qubits exceeds the emulator limit of " +
                             std::to_string(kMaxMemoryQubits));
    }
    const auto shape = SubsystemShape::qubits(memory_size + kTransistorCells);
    const std::vector<std::size_t> zeros(shape.size(), 0);
    return MachineState{basis_state(shape, zeros),
                        Occupancy{std::vector<bool>(memory_size, false), {}},
                        {}};
}

std::vector<std::string> instruction_problems(const Instruction& instr, const Occupancy& occ,
                                              std::size_t transistor_count) {
    std::vector<std::string> problems;
    switch (instr.opcode) {
        case Opcode::Init:
            reject_unexpected(instr, true, false, false, false, false, true, problems);
            require_address(instr, occ, problems);
            if (!instr.init_value) {
                problems.emplace_back("missing parameter: init value");
            } else if (*instr.init_value != 0 && *instr.init_value != 1) {
                problems.emplace_back("init value must be 0 or 1");
            }
            if (slot_in_range(instr, occ) && occ.memory[*instr.memory_addr]) {
                problems.emplace_back("slot occupied: m" + std::to_string(*instr.memory_addr));
            }
            break;
        case Opcode::Load:
            reject_unexpected(instr, true, true, false, false, false, false, problems);
            require_address(instr, occ, problems);
            require_cell(instr, problems);
            if (slot_in_range(instr, occ) && !occ.memory[*instr.memory_addr]) {
                problems.emplace_back("slot unoccupied: m" + std::to_string(*instr.memory_addr));
            }
            if (cell_in_range(instr) && occ.cells[*instr.cell]) {
                problems.emplace_back("cell occupied: c" + std::to_string(*instr.cell));
            }
            break;
        case Opcode::Save:
            reject_unexpected(instr, true, true, false, false, false, false, problems);
            require_cell(instr, problems);
            require_address(instr, occ, problems);
            if (cell_in_range(instr) && !occ.cells[*instr.cell]) {
                problems.emplace_back("cell unoccupied: c" + std::to_string(*instr.cell));
            }
            if (slot_in_range(instr, occ) && occ.memory[*instr.memory_addr]) {
                problems.emplace_back("slot occupied: m" + std::to_string(*instr.memory_addr));
            }
            break;
        case Opcode::Qet:
            reject_unexpected(instr, false, false, true, false, true, false, problems);
            require_angle(instr.theta, "theta", problems);
            require_transistor(instr, transistor_count, problems);
            if (!occ.cells[1] || !occ.cells[2]) {
                problems.emplace_back("transistor cells unoccupied: QET needs c1 and c2");
            }
            break;
        case Opcode::Phase:
            reject_unexpected(instr, false, false, true, true, true, false, problems);
            require_angle(instr.theta, "theta", problems);
            require_angle(instr.phi, "phi", problems);
            require_transistor(instr, transistor_count, problems);
            if (!occ.cells[1] || !occ.cells[2]) {
                problems.emplace_back("transistor cells unoccupied: PHASE needs c1 and c2");
            }
            break;
        case Opcode::Cqet:
            reject_unexpected(instr, false, false, false, false, true, false, problems);
            require_transistor(instr, transistor_count, problems);
            if (!occ.cells[0] || !occ.cells[1] || !occ.cells[2]) {
                problems.emplace_back("transistor cells unoccupied: CQET needs c0, c1 and c2");
            }
            break;
        case Opcode::Measure:
            reject_unexpected(instr, true, false, false, false, false, false, problems);
            require_address(instr, occ, problems);
            if (slot_in_range(instr, occ) && !occ.memory[*instr.memory_addr]) {
                problems.emplace_back("slot unoccupied: m" + std::to_string(*instr.memory_addr));
            }
            break;
    }
    return problems;
}

Occupancy next_occupancy(Occupancy occ, const Instruction& instr) {
    const auto set_slot = [&](bool value) {
        if (slot_in_range(instr, occ)) {
            occ.memory[*instr.memory_addr] = value;
        }
    };
    const auto set_cell = [&](bool value) {
        if (cell_in_range(instr)) {
            occ.cells[*instr.cell] = value;
        }
    };
    switch (instr.opcode) {
        case Opcode::Init:
            set_slot(true);
            break;
        case Opcode::Load:
            set_slot(false);
            set_cell(true);
            break;
        case Opcode::Save:
            set_cell(false);
            set_slot(true);
            break;
        case Opcode::Measure:
            set_slot(false);
            break;
        case Opcode::Qet:
        case Opcode::Phase:
        case Opcode::Cqet:
            break;
    }
    return occ;
}

StepResult execute_instruction(MachineState state, const Instruction& instr, std::size_t index,
                               RandomSource& rng) {
    const auto problems = instruction_problems(instr, state.occupancy);
    if (!problems.empty()) {
        throw ExecutionError(index, instr.opcode, problems.front());
    }

    std::optional<int> outcome;
    switch (instr.opcode) {
        case Opcode::Init:
            if (*instr.init_value == 1) {
                state.reg = flip(state.reg, state.memory_qubit(*instr.memory_addr));
            }
            break;
        case Opcode::Load:
        case Opcode::Save:
            // The receiving position is |0⟩ and unentangled, so a swap moves the qubit
            // together with its correlations.
            state.reg = apply_local(state.reg, swap_matrix(),
                                    {state.memory_qubit(*instr.memory_addr),
                                     state.cell_qubit(*instr.cell)});
            break;
        case Opcode::Qet:
            state.reg = apply_local(state.reg, qet_matrix(*instr.theta),
                                    {state.cell_qubit(kPairCells[0]), state.cell_qubit(kPairCells[1])});
            break;
        case Opcode::Phase:
            state.reg = apply_local(state.reg, phase_matrix(*instr.theta, *instr.phi),
                                    {state.cell_qubit(kPairCells[0]), state.cell_qubit(kPairCells[1])});
            break;
        case Opcode::Cqet:
            state.reg = apply_local(state.reg, cqet_matrix(),
                                    {state.cell_qubit(0), state.cell_qubit(1), state.cell_qubit(2)});
            break;
        case Opcode::Measure: {
            const std::size_t qubit = state.memory_qubit(*instr.memory_addr);
            Measurement m = measure_subsystem(state.reg, qubit, rng);
            state.reg = std::move(m.collapsed);
            if (m.outcome == 1) {
                state.reg = flip(state.reg, qubit);
            }
            outcome = static_cast<int>(m.outcome);
            state.classical_results.push_back({*instr.memory_addr, *outcome});
            break;
        }
    }
    state.occupancy = next_occupancy(std::move(state.occupancy), instr);
    TraceRecord record{index, instr, state.occupancy, outcome};
    return {std::move(state), std::move(record)};
}

std::vector<ProgramIssue> validate_program(const QuantumProgram& program,
                                           std::size_t transistor_count) {
    std::vector<ProgramIssue> issues;
    Occupancy occ{std::vector<bool>(program.memory_size, false), {}};
    for (std::size_t i = 0; i < program.instructions.size(); ++i) {
        const Instruction& instr = program.instructions[i];
        for (auto& message : instruction_problems(instr, occ, transistor_count)) {
            issues.push_back({i, std::move(message)});
        }
        occ = next_occupancy(std::move(occ), instr);
    }
    return issues;
}

RunResult run_instructions(MachineState state, const std::vector<Instruction>& instructions,
                           RandomSource& rng) {
    ExecutionTrace trace;
    trace.reserve(instructions.size());
    for (std::size_t i = 0; i < instructions.size(); ++i) {
        StepResult step = execute_instruction(std::move(state), instructions[i], i, rng);
        state = std::move(step.state);
        trace.push_back(std::move(step.record));
    }
    auto results = state.classical_results;
    return {std::move(results), std::move(trace), std::move(state)};
}

RunResult run_program(const QuantumProgram& program, RandomSource& rng) {
    return run_instructions(MachineState::fresh(program.memory_size), program.instructions, rng);
}

}  // namespace qpu

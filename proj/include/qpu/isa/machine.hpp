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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qpu/core/error.hpp"
#include "qpu/core/random_source.hpp"
#include "qpu/core/state_vector.hpp"
#include "qpu/isa/instruction.hpp"

namespace qpu {

/// Largest memory the emulator accepts; the register holds 2^(s+3) amplitudes.
inline constexpr std::size_t kMaxMemoryQubits = 20;

/// Runtime precondition failure of an instruction.
class ExecutionError : public Error {
  public:
    ExecutionError(std::size_t index, Opcode opcode, std::string condition);

    std::size_t index() const noexcept { return index_; }
    Opcode opcode() const noexcept { return opcode_; }
    const std::string& condition() const noexcept { return condition_; }

  private:
    std::size_t index_;
    Opcode opcode_;
    std::string condition_;
};

struct MeasurementRecord {
    std::size_t memory_addr = 0;
    int bit = 0;

    friend bool operator==(const MeasurementRecord&, const MeasurementRecord&) = default;
};

/// Which memory slots and transistor cells currently hold a qubit.
struct Occupancy {
    std::vector<bool> memory;
    std::array<bool, kTransistorCells> cells{};

    friend bool operator==(const Occupancy&, const Occupancy&) = default;
};

/// Register over s memory qubits followed by the 3 transistor cells, plus
/// occupancy flags and the classical results collected so far.
///
/// Unoccupied positions are |0⟩ and unentangled with the rest.
struct MachineState {
    StateVector reg;
    Occupancy occupancy;
    std::vector<MeasurementRecord> classical_results;

    static MachineState fresh(std::size_t memory_size);

    std::size_t memory_size() const noexcept { return occupancy.memory.size(); }
    std::size_t memory_qubit(std::size_t addr) const noexcept { return addr; }
    std::size_t cell_qubit(std::size_t cell) const noexcept { return memory_size() + cell; }
};

struct TraceRecord {
    std::size_t index = 0;
    Instruction instruction;
    Occupancy occupancy;  // after the instruction
    std::optional<int> outcome;
};

using ExecutionTrace = std::vector<TraceRecord>;

struct StepResult {
    MachineState state;
    TraceRecord record;
};

/// Problems with `instr` against the given occupancy and memory size, in
/// the order they are checked. Empty when the instruction may run.
std::vector<std::string> instruction_problems(const Instruction& instr, const Occupancy& occupancy,
                                              std::size_t transistor_count = 1);

/// Occupancy after `instr`, assuming it was admissible.
Occupancy next_occupancy(Occupancy occupancy, const Instruction& instr);

/// Executes one instruction. `index` is used in error reports only.
StepResult execute_instruction(MachineState state, const Instruction& instr, std::size_t index,
                               RandomSource& rng);

struct ProgramIssue {
    std::size_t index = 0;
    std::string message;

    friend bool operator==(const ProgramIssue&, const ProgramIssue&) = default;
};

/// Static check: simulates the occupancy flags over the whole program and
/// reports every violation. Empty result means the program is valid.
std::vector<ProgramIssue> validate_program(const QuantumProgram& program,
                                           std::size_t transistor_count = 1);

struct RunResult {
    std::vector<MeasurementRecord> classical_results;
    ExecutionTrace trace;
    MachineState final_state;
};

/// Runs the program in order on a fresh machine. Throws ExecutionError at the
/// first instruction whose preconditions fail.
RunResult run_program(const QuantumProgram& program, RandomSource& rng);

/// Runs instructions on an existing machine state (no INIT-freshness assumed).
RunResult run_instructions(MachineState state, const std::vector<Instruction>& instructions,
                           RandomSource& rng);

}  // namespace qpu

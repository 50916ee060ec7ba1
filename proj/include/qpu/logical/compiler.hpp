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
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qpu/core/error.hpp"
#include "qpu/core/state_vector.hpp"
#include "qpu/isa/instruction.hpp"
#include "qpu/isa/machine.hpp"

namespace qpu::logical {

class CompileError : public Error {
  public:
    using Error::Error;
};

/// Logical qubit i is stored on the physical pair (first, second) with
/// |0_L⟩ = |01⟩ and |1_L⟩ = |10⟩.
struct PhysicalPair {
    std::size_t first = 0;
    std::size_t second = 0;

    friend bool operator==(const PhysicalPair&, const PhysicalPair&) = default;
};

class LogicalQubitMap {
  public:
    LogicalQubitMap() = default;

    /// Logical i ↦ (2i, 2i+1) for i < n.
    static LogicalQubitMap pairwise(std::size_t n);

    /// Throws CompileError if the pair overlaps an assigned pair or is degenerate.
    void assign(std::size_t logical_id, PhysicalPair pair);

    bool contains(std::size_t logical_id) const;
    /// Throws CompileError for unassigned ids.
    const PhysicalPair& pair(std::size_t logical_id) const;
    std::size_t logical_count() const { return pairs_.size(); }
    /// One past the largest physical address used.
    std::size_t physical_size() const;
    /// (logical id, pair) in assignment order.
    const std::vector<std::pair<std::size_t, PhysicalPair>>& entries() const { return pairs_; }

  private:
    std::vector<std::pair<std::size_t, PhysicalPair>> pairs_;
};

enum class GateKind { RX, RZ, CNOT, SU2 };

struct LogicalGate {
    GateKind kind = GateKind::RX;
    double theta = 0.0;
    Eigen::Matrix2cd matrix = Eigen::Matrix2cd::Identity();
    std::vector<std::size_t> qubits;

    static LogicalGate rx(std::size_t q, double theta);
    static LogicalGate rz(std::size_t q, double theta);
    static LogicalGate cnot(std::size_t control, std::size_t target);
    static LogicalGate su2(std::size_t q, const Eigen::Matrix2cd& u);

    bool operator==(const LogicalGate& other) const;
};

struct LogicalProgram {
    std::size_t qubit_count = 0;
    std::vector<LogicalGate> gates;
    std::vector<std::size_t> measured;  // in readout order

    bool operator==(const LogicalProgram& other) const = default;
};

/// Empty when the program is well formed; otherwise one message per problem.
std::vector<std::string> validate_logical_program(const LogicalProgram& program);

/// Parameters of the CNOT synthesis: CQET, then QET(target_qet_theta) on the
/// target pair, then PHASE(control_phase_theta, control_phase_phi) on the
/// control pair.
struct CnotSynthesis {
    double target_qet_theta;
    double control_phase_theta;
    double control_phase_phi;
};

inline constexpr CnotSynthesis kCnotSynthesis{std::numbers::pi, std::numbers::pi / 2, 0.0};

using Instructions = std::vector<Instruction>;

Instructions encode_init(const LogicalQubitMap& map, std::size_t id, int bit);
Instructions logical_rx(const LogicalQubitMap& map, std::size_t id, double theta);
Instructions logical_rz(const LogicalQubitMap& map, std::size_t id, double theta);
Instructions logical_su2(const LogicalQubitMap& map, std::size_t id, const Eigen::Matrix2cd& u);
Instructions synthesize_logical_cnot(const LogicalQubitMap& map, std::size_t control, std::size_t target,
                                     const CnotSynthesis& constants = kCnotSynthesis);
Instructions compile_gate(const LogicalQubitMap& map, const LogicalGate& gate);

/// Encoded |0_L⟩ inits, compiled gates, then MEASURE first and MEASURE second
/// for each measured qubit. Throws CompileError for invalid programs.
QuantumProgram transform_program(const LogicalProgram& program, const LogicalQubitMap& map);
QuantumProgram transform_program(const LogicalProgram& program);

/// Logical bits read from the first qubit of each measured pair, in `measured` order.
std::vector<int> decode_logical_results(const std::vector<MeasurementRecord>& records, const LogicalQubitMap& map,
                                        const std::vector<std::size_t>& measured);

/// True iff at most 1e−9 of the probability lies outside the per-pair
/// {|01⟩, |10⟩} configurations.
bool leakage_check(const StateVector& reg, const LogicalQubitMap& map);

/// Matrix of `instructions` on the logical subspace of `ids` (first id most
/// significant), obtained by running every encoded basis input.
Eigen::MatrixXcd logical_action(const Instructions& instructions, const LogicalQubitMap& map,
                                const std::vector<std::size_t>& ids);

/// 1 − |tr(U†V)|²/d²; zero iff U and V agree up to a global phase.
double process_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

}  // namespace qpu::logical

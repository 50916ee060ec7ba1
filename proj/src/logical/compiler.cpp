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


#include "qpu/logical/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "qpu/core/random_source.hpp"
#include "qpu/logical/su2.hpp"

namespace qpu::logical {
namespace {

std::string qubit_name(std::size_t id) { return "q" + std::to_string(id); }

void check_distinct(const PhysicalPair& a, const PhysicalPair& b, const char* what) {
    if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second) {
        throw CompileError(std::string(what) + ": physical pairs overlap");
    }
}

}  // namespace

LogicalQubitMap LogicalQubitMap::pairwise(std::size_t n) {
    LogicalQubitMap map;
    for (std::size_t i = 0; i < n; ++i) {
        map.assign(i, {2 * i, 2 * i + 1});
    }
    return map;
}

void LogicalQubitMap::assign(std::size_t logical_id, PhysicalPair pair) {
    if (pair.first == pair.second) {
        throw CompileError("logical " + qubit_name(logical_id) + " needs two distinct physical qubits");
    }
    if (contains(logical_id)) {
        throw CompileError("logical " + qubit_name(logical_id) + " already assigned");
    }
    for (const auto& [id, existing] : pairs_) {
        check_distinct(existing, pair, "assign");
    }
    pairs_.emplace_back(logical_id, pair);
}

bool LogicalQubitMap::contains(std::size_t logical_id) const {
    return std::any_of(pairs_.begin(), pairs_.end(), [&](const auto& p) { return p.first == logical_id; });
}

const PhysicalPair& LogicalQubitMap::pair(std::size_t logical_id) const {
    for (const auto& [id, p] : pairs_) {
        if (id == logical_id) {
            return p;
        }
    }
    throw CompileError("logical " + qubit_name(logical_id) + " is not assigned to a physical pair");
}

std::size_t LogicalQubitMap::physical_size() const {
    std::size_t size = 0;
    for (const auto& [id, p] : pairs_) {
        size = std::max({size, p.first + 1, p.second + 1});
    }
    return size;
}

LogicalGate LogicalGate::rx(std::size_t q, double theta) { return {GateKind::RX, theta, Eigen::Matrix2cd::Identity(), {q}}; }

LogicalGate LogicalGate::rz(std::size_t q, double theta) { return {GateKind::RZ, theta, Eigen::Matrix2cd::Identity(), {q}}; }

LogicalGate LogicalGate::cnot(std::size_t control, std::size_t target) {
    return {GateKind::CNOT, 0.0, Eigen::Matrix2cd::Identity(), {control, target}};
}

LogicalGate LogicalGate::su2(std::size_t q, const Eigen::Matrix2cd& u) { return {GateKind::SU2, 0.0, u, {q}}; }

bool LogicalGate::operator==(const LogicalGate& other) const {
    return kind == other.kind && theta == other.theta && matrix == other.matrix && qubits == other.qubits;
}

std::vector<std::string> validate_logical_program(const LogicalProgram& program) {
    std::vector<std::string> issues;
    std::set<std::size_t> measured;
    for (const auto q : program.measured) {
        if (q >= program.qubit_count) {
            issues.push_back("MEASURE: " + qubit_name(q) + " out of range (n=" + std::to_string(program.qubit_count) + ")");
        } else if (!measured.insert(q).second) {
            issues.push_back("MEASURE: " + qubit_name(q) + " measured twice");
        }
    }
    for (std::size_t i = 0; i < program.gates.size(); ++i) {
        const auto& g = program.gates[i];
        const std::string where = "gate " + std::to_string(i) + ": ";
        const std::size_t arity = g.kind == GateKind::CNOT ? 2 : 1;
        if (g.qubits.size() != arity) {
            issues.push_back(where + "expected " + std::to_string(arity) + " operand(s)");
            continue;
        }
        for (const auto q : g.qubits) {
            if (q >= program.qubit_count) {
                issues.push_back(where + qubit_name(q) + " out of range (n=" + std::to_string(program.qubit_count) + ")");
            }
        }
        if (g.kind == GateKind::CNOT && g.qubits[0] == g.qubits[1]) {
            issues.push_back(where + "CNOT control and target coincide");
        }
        if ((g.kind == GateKind::RX || g.kind == GateKind::RZ) && !std::isfinite(g.theta)) {
            issues.push_back(where + "non-finite theta");
        }
        if (g.kind == GateKind::SU2 &&
            (!g.matrix.allFinite() ||
             (g.matrix.adjoint() * g.matrix - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > kAlgebraTolerance)) {
            issues.push_back(where + "SU2 matrix is not unitary");
        }
    }
    return issues;
}

Instructions encode_init(const LogicalQubitMap& map, std::size_t id, int bit) {
    if (bit != 0 && bit != 1) {
        throw CompileError("logical basis bit must be 0 or 1");
    }
    const auto& p = map.pair(id);
    return {Instruction::init(p.first, bit), Instruction::init(p.second, 1 - bit)};
}

namespace {

Instructions on_pair(const PhysicalPair& p, Instruction gate) {
    return {Instruction::load(p.first, 1), Instruction::load(p.second, 2), gate, Instruction::save(1, p.first),
            Instruction::save(2, p.second)};
}

void append(Instructions& out, const Instructions& more) { out.insert(out.end(), more.begin(), more.end()); }

}  // namespace

Instructions logical_rx(const LogicalQubitMap& map, std::size_t id, double theta) {
    return on_pair(map.pair(id), Instruction::qet(-theta));
}

Instructions logical_rz(const LogicalQubitMap& map, std::size_t id, double theta) {
    return on_pair(map.pair(id), Instruction::phase(theta, 0.0));
}

Instructions logical_su2(const LogicalQubitMap& map, std::size_t id, const Eigen::Matrix2cd& u) {
    const auto z = decompose_su2(u);
    Instructions out = logical_rz(map, id, z.c);
    append(out, logical_rx(map, id, z.b));
    append(out, logical_rz(map, id, z.a));
    return out;
}

Instructions synthesize_logical_cnot(const LogicalQubitMap& map, std::size_t control, std::size_t target,
                                     const CnotSynthesis& k) {
    const auto& c = map.pair(control);
    const auto& t = map.pair(target);
    if (control == target) {
        throw CompileError("CNOT control and target coincide");
    }
    check_distinct(c, t, "CNOT");
    return {
        Instruction::load(c.first, 0),
        Instruction::load(t.first, 1),
        Instruction::load(t.second, 2),
        Instruction::cqet(),
        Instruction::qet(k.target_qet_theta),
        Instruction::save(1, t.first),
        Instruction::save(2, t.second),
        Instruction::save(0, c.first),
        Instruction::load(c.first, 1),
        Instruction::load(c.second, 2),
        Instruction::phase(k.control_phase_theta, k.control_phase_phi),
        Instruction::save(1, c.first),
        Instruction::save(2, c.second),
    };
}

Instructions compile_gate(const LogicalQubitMap& map, const LogicalGate& gate) {
    switch (gate.kind) {
        case GateKind::RX:
            return logical_rx(map, gate.qubits.at(0), gate.theta);
        case GateKind::RZ:
            return logical_rz(map, gate.qubits.at(0), gate.theta);
        case GateKind::SU2:
            return logical_su2(map, gate.qubits.at(0), gate.matrix);
        case GateKind::CNOT:
            return synthesize_logical_cnot(map, gate.qubits.at(0), gate.qubits.at(1));
    }
    throw CompileError("unknown logical gate");
}

QuantumProgram transform_program(const LogicalProgram& program, const LogicalQubitMap& map) {
    const auto issues = validate_logical_program(program);
    if (!issues.empty()) {
        throw CompileError(issues.front());
    }
    QuantumProgram out{map.physical_size(), {}};
    for (std::size_t q = 0; q < program.qubit_count; ++q) {
        append(out.instructions, encode_init(map, q, 0));
    }
    for (const auto& gate : program.gates) {
        append(out.instructions, compile_gate(map, gate));
    }
    for (const auto q : program.measured) {
        const auto& p = map.pair(q);
        out.instructions.push_back(Instruction::measure(p.first));
        out.instructions.push_back(Instruction::measure(p.second));
    }
    return out;
}

QuantumProgram transform_program(const LogicalProgram& program) {
    return transform_program(program, LogicalQubitMap::pairwise(program.qubit_count));
}

std::vector<int> decode_logical_results(const std::vector<MeasurementRecord>& records, const LogicalQubitMap& map,
                                        const std::vector<std::size_t>& measured) {
    std::vector<int> bits;
    for (const auto q : measured) {
        const auto first = map.pair(q).first;
        const auto it = std::find_if(records.begin(), records.end(),
                                     [&](const MeasurementRecord& r) { return r.memory_addr == first; });
        if (it == records.end()) {
            throw CompileError("no measurement recorded for logical " + qubit_name(q));
        }
        bits.push_back(it->bit);
    }
    return bits;
}

bool leakage_check(const StateVector& reg, const LogicalQubitMap& map) {
    const auto& shape = reg.shape();
    double leaked = 0;
    for (std::size_t index = 0; index < reg.dimension(); ++index) {
        const double p = std::norm(reg.amplitude(index));
        if (p == 0) {
            continue;
        }
        for (const auto& [id, pair] : map.entries()) {
            if (shape.level_at(index, pair.first) == shape.level_at(index, pair.second)) {
                leaked += p;
                break;
            }
        }
    }
    return leaked <= kPipelineTolerance;
}

Eigen::MatrixXcd logical_action(const Instructions& instructions, const LogicalQubitMap& map,
                                const std::vector<std::size_t>& ids) {
    const std::size_t k = ids.size();
    const std::size_t dim = std::size_t{1} << k;
    const std::size_t s = map.physical_size();
    const auto bit_of = [k](std::size_t basis, std::size_t j) { return static_cast<int>((basis >> (k - 1 - j)) & 1u); };
    Eigen::MatrixXcd action(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        Instructions program;
        for (std::size_t j = 0; j < k; ++j) {
            append(program, encode_init(map, ids[j], bit_of(col, j)));
        }
        append(program, instructions);
        RandomSource rng(0);
        const auto result = run_instructions(MachineState::fresh(s), program, rng);
        const auto& reg = result.final_state.reg;
        for (std::size_t row = 0; row < dim; ++row) {
            std::vector<std::size_t> levels(reg.shape().size(), 0);
            for (std::size_t j = 0; j < k; ++j) {
                const auto& p = map.pair(ids[j]);
                levels[p.first] = static_cast<std::size_t>(bit_of(row, j));
                levels[p.second] = static_cast<std::size_t>(1 - bit_of(row, j));
            }
            action(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                reg.amplitude(reg.shape().index_of(levels));
        }
    }
    return action;
}

double process_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw DimensionError("process_distance: shape mismatch");
    }
    const double d = static_cast<double>(u.rows());
    return 1.0 - std::norm((u.adjoint() * v).trace()) / (d * d);
}

}  // namespace qpu::logical

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


#include "qpu/service/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <set>

#include "qpu/isa/program_text.hpp"

namespace qpu::service {
namespace {

std::optional<ServiceOp> parse_service_op(const std::string& name) {
    if (text::iequals(name, "QET")) {
        return ServiceOp::Qet;
    }
    if (text::iequals(name, "PHASE")) {
        return ServiceOp::Phase;
    }
    if (text::iequals(name, "CQET")) {
        return ServiceOp::Cqet;
    }
    if (text::iequals(name, "MEASURE")) {
        return ServiceOp::Measure;
    }
    return std::nullopt;
}

std::string qname(std::int64_t q) { return "q" + std::to_string(q); }

void append(std::vector<Instruction>& out, const std::vector<Instruction>& more) {
    out.insert(out.end(), more.begin(), more.end());
}

std::vector<Instruction> on_pair(const PhysicalPair& p, Instruction gate) {
    return {Instruction::load(p.first, 1), Instruction::load(p.second, 2), gate, Instruction::save(1, p.first),
            Instruction::save(2, p.second)};
}

}  // namespace

AnalysisResult analyze(const ClientRequest& request, const AddressTable& table, const AnalysisOptions& options) {
    AnalysisResult result;
    ValidatedRequest validated{request.client, {}};
    std::set<std::int64_t> introduced;
    std::set<std::int64_t> measured;
    if (request.client.empty()) {
        result.errors.push_back({std::nullopt, "missing client id"});
    }
    for (std::size_t i = 0; i < request.ops.size(); ++i) {
        const auto& d = request.ops[i];
        std::vector<std::string> errors = d.problems;
        const auto op = parse_service_op(d.op);
        if (!op) {
            errors.push_back(d.op.empty() ? "missing operation name" : "unknown operation '" + d.op + "'");
        }
        bool addresses_ok = true;
        for (const auto q : d.qubits) {
            if (q < 0 || static_cast<std::uint64_t>(q) >= options.max_local_qubits) {
                errors.push_back("address out of range: " + qname(q) + " (allowed q0..q" +
                                 std::to_string(options.max_local_qubits - 1) + ")");
                addresses_ok = false;
            } else if (measured.contains(q)) {
                errors.push_back("operation after MEASURE on " + qname(q));
            }
        }
        if (op) {
            const std::size_t arity = *op == ServiceOp::Cqet ? 2 : 1;
            if (d.qubits.size() != arity) {
                errors.push_back("expected " + std::to_string(arity) + " qubit address" + (arity == 1 ? "" : "es") +
                                 ", got " + std::to_string(d.qubits.size()));
            }
            const bool wants_theta = *op == ServiceOp::Qet || *op == ServiceOp::Phase;
            const bool allows_phi = *op == ServiceOp::Phase;
            if (wants_theta && !d.theta) {
                errors.emplace_back("missing parameter: theta");
            }
            if (!wants_theta && d.theta) {
                errors.push_back("unexpected parameter: theta");
            }
            if (!allows_phi && d.phi) {
                errors.push_back("unexpected parameter: phi");
            }
            if ((d.theta && !std::isfinite(*d.theta)) || (d.phi && !std::isfinite(*d.phi))) {
                errors.push_back("non-finite parameter");
            }
            if (*op == ServiceOp::Cqet && d.qubits.size() == 2) {
                if (d.qubits[0] == d.qubits[1]) {
                    errors.push_back("CQET operands must be distinct");
                }
                for (const auto q : d.qubits) {
                    if (addresses_ok && !introduced.contains(q) &&
                        !table.find(request.client, static_cast<std::size_t>(q))) {
                        errors.push_back("qubit " + qname(q) + " was never introduced by client '" + request.client +
                                         "'");
                    }
                }
            }
        }
        for (const auto q : d.qubits) {
            introduced.insert(q);
        }
        if (op && *op == ServiceOp::Measure) {
            for (const auto q : d.qubits) {
                measured.insert(q);
            }
        }
        if (errors.empty()) {
            ValidatedOp v{*op, {}, d.theta.value_or(0.0), d.phi.value_or(0.0)};
            for (const auto q : d.qubits) {
                v.qubits.push_back(static_cast<std::size_t>(q));
            }
            validated.ops.push_back(std::move(v));
        }
        for (auto& e : errors) {
            result.errors.push_back({i, std::move(e)});
        }
    }
    if (measured.empty()) {
        result.errors.push_back({std::nullopt, "request contains no MEASURE"});
    }
    if (result.errors.empty()) {
        result.request = std::move(validated);
    }
    return result;
}

Segment transform(const ValidatedRequest& request, AddressTable& table, std::uint64_t ticket) {
    std::vector<std::size_t> locals;
    for (const auto& op : request.ops) {
        for (const auto q : op.qubits) {
            if (std::find(locals.begin(), locals.end(), q) == locals.end()) {
                locals.push_back(q);
            }
        }
    }
    const auto fresh = std::count_if(locals.begin(), locals.end(),
                                     [&](std::size_t q) { return !table.find(request.client, q); });
    if (table.free_physical() < 2 * static_cast<std::size_t>(fresh)) {
        throw AddressExhaustedError("physical address space exhausted: need " + std::to_string(2 * fresh) +
                                    " addresses, " + std::to_string(table.free_physical()) + " free");
    }
    Segment segment{request.client, ticket, {}, {}, {}};
    logical::LogicalQubitMap map;
    std::map<std::size_t, std::size_t> global_of;
    for (const auto q : locals) {
        const std::size_t g = table.ensure(request.client, q);
        global_of[q] = g;
        const auto& pair = table.physical(g);
        map.assign(g, pair);
        segment.init_bits.emplace_back(pair.first, 0);
        segment.init_bits.emplace_back(pair.second, 1);
    }
    std::set<std::size_t> measured;
    for (const auto& op : request.ops) {
        const std::size_t g = global_of.at(op.qubits[0]);
        const auto& pair = table.physical(g);
        switch (op.op) {
            case ServiceOp::Qet:
                append(segment.commands, on_pair(pair, Instruction::qet(op.theta)));
                break;
            case ServiceOp::Phase:
                append(segment.commands, on_pair(pair, Instruction::phase(op.theta, op.phi)));
                break;
            case ServiceOp::Cqet:
                append(segment.commands, logical::synthesize_logical_cnot(map, g, global_of.at(op.qubits[1])));
                break;
            case ServiceOp::Measure:
                segment.commands.push_back(Instruction::measure(pair.first));
                segment.commands.push_back(Instruction::measure(pair.second));
                segment.measured.push_back(g);
                measured.insert(g);
                break;
        }
    }
    for (const auto q : locals) {
        const std::size_t g = global_of.at(q);
        if (!measured.contains(g)) {
            const auto& pair = table.physical(g);
            segment.commands.push_back(Instruction::measure(pair.first));
            segment.commands.push_back(Instruction::measure(pair.second));
        }
    }
    return segment;
}

std::size_t ExecutionBatch::size() const {
    std::size_t n = 0;
    for (const auto& s : segments) {
        n += s.size();
    }
    return n;
}

ExecutionBatch buffer_and_batch(std::deque<Segment>& queue, std::size_t capacity) {
    ExecutionBatch batch{{}, capacity};
    std::size_t used = 0;
    while (!queue.empty() && used + queue.front().size() <= capacity) {
        used += queue.front().size();
        batch.segments.push_back(std::move(queue.front()));
        queue.pop_front();
    }
    return batch;
}

EmulatorBackend::EmulatorBackend(std::size_t capacity, std::uint64_t seed) : capacity_(capacity), rng_(seed) {}

RunResult EmulatorBackend::run(const QuantumProgram& program) {
    if (program.instructions.size() > capacity_) {
        throw Error("program of " + std::to_string(program.instructions.size()) + " commands exceeds capacity " +
                    std::to_string(capacity_));
    }
    return run_program(program, rng_);
}

DispatchResult dispatch(const ExecutionBatch& batch, Backend& backend, std::uint64_t& clock) {
    DispatchResult result;
    for (const auto& segment : batch.segments) {
        SegmentOutcome outcome;
        outcome.client = segment.client;
        outcome.ticket = segment.ticket;
        outcome.measured = segment.measured;
        try {
            std::map<std::size_t, int> bits(segment.init_bits.begin(), segment.init_bits.end());
            std::vector<std::size_t> slot_to_physical;
            for (const auto& [physical, bit] : segment.init_bits) {
                if (!outcome.addresses.contains(physical)) {
                    const std::size_t slot = slot_to_physical.size();
                    outcome.addresses[physical] = {slot, 5.0 + 0.05 * static_cast<double>(slot), 0};
                    slot_to_physical.push_back(physical);
                }
            }
            outcome.program.memory_size = slot_to_physical.size();
            std::set<std::size_t> resident;
            for (auto instr : segment.commands) {
                if (instr.memory_addr) {
                    const std::size_t physical = *instr.memory_addr;
                    auto& address = outcome.addresses.at(physical);
                    if (resident.insert(physical).second) {
                        address.recording_time = clock++;
                        outcome.program.instructions.push_back(Instruction::init(address.index, bits.at(physical)));
                    }
                    instr.memory_addr = address.index;
                }
                outcome.program.instructions.push_back(instr);
                ++clock;
            }
            auto run = backend.run(outcome.program);
            for (const auto& r : run.classical_results) {
                outcome.records.push_back({slot_to_physical.at(r.memory_addr), r.bit});
            }
            outcome.trace = std::move(run.trace);
        } catch (const std::exception& e) {
            outcome.records.clear();
            outcome.error = e.what();
        }
        result.segments.push_back(std::move(outcome));
    }
    return result;
}

std::vector<ClientResult> demux_results(const DispatchResult& result, const AddressTable& table) {
    std::vector<ClientResult> out;
    for (const auto& segment : result.segments) {
        ClientResult cr{segment.client, segment.ticket, {}, {}};
        if (segment.error) {
            cr.errors.push_back({std::nullopt, "execution failed: " + *segment.error});
            out.push_back(std::move(cr));
            continue;
        }
        std::map<std::size_t, int> bit_of;
        for (const auto& r : segment.records) {
            const auto owner = table.owner_of_physical(r.physical);
            if (!owner || table.local_of(owner->global_logical).first != segment.client) {
                cr.errors.push_back({std::nullopt, "orphan physical address " + std::to_string(r.physical)});
                continue;
            }
            bit_of[r.physical] = r.bit;
        }
        for (const auto g : segment.measured) {
            const auto local = table.local_of(g).second;
            const auto& pair = table.physical(g);
            const auto first = bit_of.find(pair.first);
            const auto second = bit_of.find(pair.second);
            if (first == bit_of.end() || second == bit_of.end()) {
                cr.errors.push_back({std::nullopt, "missing measurement for " + qname(static_cast<std::int64_t>(local))});
            } else if (first->second == second->second) {
                cr.errors.push_back({std::nullopt, "leakage on " + qname(static_cast<std::int64_t>(local)) +
                                                       ": physical bits " + std::to_string(first->second) +
                                                       std::to_string(second->second)});
            } else {
                cr.results.push_back({local, first->second});
            }
        }
        out.push_back(std::move(cr));
    }
    return out;
}

}  // namespace qpu::service

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
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qpu/core/random_source.hpp"
#include "qpu/isa/machine.hpp"
#include "qpu/service/address_table.hpp"

namespace qpu::service {

/// One operation as received from a client, before any checking.
struct OpDescriptor {
    std::string op;
    std::vector<std::int64_t> qubits;
    std::optional<double> theta;
    std::optional<double> phi;
    /// Structural problems found while decoding the wire message.
    std::vector<std::string> problems;
};

struct ClientRequest {
    ClientId client;
    std::vector<OpDescriptor> ops;
};

enum class ServiceOp { Qet, Phase, Cqet, Measure };

struct ValidatedOp {
    ServiceOp op = ServiceOp::Qet;
    std::vector<std::size_t> qubits;  // local logical addresses
    double theta = 0.0;
    double phi = 0.0;
};

struct ValidatedRequest {
    ClientId client;
    std::vector<ValidatedOp> ops;
};

/// `index` is the operation index, or empty for request-level problems.
struct OpError {
    std::optional<std::size_t> index;
    std::string message;

    friend bool operator==(const OpError&, const OpError&) = default;
};

struct AnalysisOptions {
    std::size_t max_local_qubits = 64;
};

struct AnalysisResult {
    std::optional<ValidatedRequest> request;
    std::vector<OpError> errors;
};

/// Checks the dataset, parameter availability and qubit addresses. A CQET
/// operand must already be introduced: used earlier in the request or present
/// in the client's table. The request must end every qubit's use with at most
/// one MEASURE and contain at least one MEASURE.
AnalysisResult analyze(const ClientRequest& request, const AddressTable& table, const AnalysisOptions& options = {});

/// One client's physical run: global physical addresses, no INITs yet.
struct Segment {
    ClientId client;
    std::uint64_t ticket = 0;
    std::vector<Instruction> commands;
    /// Encoded-basis bit of every physical qubit the segment uses, in first-use order.
    std::vector<std::pair<std::size_t, int>> init_bits;
    /// Global logical addresses whose results go back to the client, in MEASURE order.
    std::vector<std::size_t> measured;

    /// Commands plus the INITs the dispatcher will insert.
    std::size_t size() const { return commands.size() + init_bits.size(); }
};

/// Allocates global addresses (updating `table`) and rewrites the request into
/// physical instructions. Client QET(θ) and PHASE(θ, ϕ) act on the pair loaded
/// into cells 1 and 2; CQET is the synthesized logical CNOT. Qubits the client
/// did not measure get discarded MEASUREs so the segment ends empty.
Segment transform(const ValidatedRequest& request, AddressTable& table, std::uint64_t ticket = 0);

struct ExecutionBatch {
    std::vector<Segment> segments;
    std::size_t capacity = 0;

    std::size_t size() const;
};

/// Takes whole segments from the front of `queue` while they fit in `capacity`.
ExecutionBatch buffer_and_batch(std::deque<Segment>& queue, std::size_t capacity);

/// Runs physical programs. Implementations may throw qpu::Error.
class Backend {
  public:
    virtual ~Backend() = default;
    virtual std::size_t capacity() const = 0;
    virtual RunResult run(const QuantumProgram& program) = 0;
};

class EmulatorBackend : public Backend {
  public:
    explicit EmulatorBackend(std::size_t capacity = 1024, std::uint64_t seed = 0);

    std::size_t capacity() const override { return capacity_; }
    RunResult run(const QuantumProgram& program) override;

  private:
    std::size_t capacity_;
    RandomSource rng_;
};

/// Synthetic address parameters of a physical qubit within a segment.
struct PhysicalAddress {
    std::size_t index = 0;         // QPU memory slot
    double frequency = 0.0;        // GHz
    std::uint64_t recording_time = 0;  // dispatcher clock tick of the INIT
};

struct DispatchRecord {
    std::size_t physical = 0;  // global physical address
    int bit = 0;

    friend bool operator==(const DispatchRecord&, const DispatchRecord&) = default;
};

struct SegmentOutcome {
    ClientId client;
    std::uint64_t ticket = 0;
    std::map<std::size_t, PhysicalAddress> addresses;  // global physical -> slot
    QuantumProgram program;
    std::vector<std::size_t> measured;  // as in the segment
    std::vector<DispatchRecord> records;
    ExecutionTrace trace;
    std::optional<std::string> error;
};

struct DispatchResult {
    std::vector<SegmentOutcome> segments;
};

/// Executes each segment as its own program; a failing segment records its
/// error and does not affect the others. `clock` advances per instruction.
DispatchResult dispatch(const ExecutionBatch& batch, Backend& backend, std::uint64_t& clock);

struct QubitResult {
    std::size_t qubit = 0;  // client-local logical address
    int bit = 0;

    friend bool operator==(const QubitResult&, const QubitResult&) = default;
};

struct ClientResult {
    ClientId client;
    std::uint64_t ticket = 0;
    std::vector<QubitResult> results;
    std::vector<OpError> errors;
};

/// Decodes each logical bit from the first qubit of its pair and maps it back
/// to the client's local address. Equal pair bits are reported as leakage.
std::vector<ClientResult> demux_results(const DispatchResult& result, const AddressTable& table);

}  // namespace qpu::service

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
#include <cstdint>
#include <string>
#include <vector>

#include "qpu/core/state_vector.hpp"
#include "qpu/physics/elementary.hpp"

namespace qpu::physics {

struct ProtocolInput {
    Amplitude alpha;
    Amplitude beta;
    Amplitude gamma;
    Amplitude delta;

    std::array<Amplitude, 4> coefficients() const { return {alpha, beta, gamma, delta}; }
};

/// Basis relabeling applied after a step's operators, term by term.
struct Relabel {
    Configuration from;
    Configuration to;
};

struct ProtocolStep {
    int number = 0;                     // index k of the state ψ_k it produces
    std::vector<ElementaryOp> factors;  // application order
    std::vector<Relabel> relabels;
};

/// Step 1 prepares ψ₁ and has no operators; steps 2..12 produce ψ₂..ψ₁₂.
std::vector<ProtocolStep> protocol_sequence(Convention convention = Convention::Ideal);

/// Configurations of the α, β, γ, δ terms of ψ_k as printed, k = 1..12.
const std::array<Configuration, 4>& printed_terms(int k);

/// Σ coefficient · |printed configuration of ψ_k⟩.
StateVector printed_state(int k, const ProtocolInput& input);

StateVector apply_step(const StateVector& state, const ProtocolStep& step);

struct ProtocolRun {
    StateVector final_state;               // ψ₁₂
    std::vector<StateVector> intermediates;  // ψ₁..ψ₁₁
};

/// Throws NormalizationError for an input off the unit sphere by more than 1e−9.
ProtocolRun run_protocol(const ProtocolInput& input, Convention convention = Convention::Ideal);

/// 3-qubit frame (control, target a, target c): control 0 ↔ dot level 1.
/// Inputs store excitations on memory levels {1, 3}, outputs on {0, 1}.
Configuration input_configuration(unsigned frame_index);
Configuration output_configuration(unsigned frame_index);
Eigen::VectorXcd input_frame_state(const ProtocolInput& input);
Eigen::VectorXcd output_frame_state(const StateVector& protocol_state);

struct CqetReport {
    double max_infidelity = 0.0;
    /// Phase of each basis branch (α, β, γ, δ inputs) relative to the
    /// reference, with the α branch's phase removed as global.
    std::array<double, 4> branch_phases{};
};

/// Ideal: reference is the transfer pattern of the CQET matrix (moduli).
/// Physical: reference is the literal matrix.
CqetReport verify_against_cqet(std::size_t samples, Convention convention = Convention::Ideal,
                               std::uint64_t seed = 1);

}  // namespace qpu::physics

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
#include <string>
#include <vector>

#include "qpu/core/local_unitary.hpp"
#include "qpu/core/subsystem_shape.hpp"

namespace qpu::physics {

/// Subsystem positions of the three-cavity register.
inline constexpr std::size_t kPhotonA = 0;
inline constexpr std::size_t kMemA = 1;
inline constexpr std::size_t kPhotonB = 2;
inline constexpr std::size_t kDotB = 3;
inline constexpr std::size_t kPhotonC = 4;
inline constexpr std::size_t kMemC = 5;
inline constexpr std::size_t kProtocolDimension = 384;

/// photon_a(2) mem_a(4) photon_b(2) dot_b(3) photon_c(2) mem_c(4).
const SubsystemShape& protocol_shape();

/// A basis configuration written with the physical labels: memory levels 0..3,
/// dot levels 1..3, photon numbers 0..1.
using Configuration = std::array<int, 6>;

std::size_t configuration_index(const Configuration& config);
Configuration configuration_at(std::size_t index);
std::string to_string(const Configuration& config);

/// Photons plus atoms in level 2 or 3.
int excitation_count(const Configuration& config);

enum class Cavity { A, B, C };
enum class OpKind { R, U, Q };
enum class Convention { Ideal, Physical };

char cavity_name(Cavity c);
std::size_t photon_of(Cavity c);
std::size_t atom_of(Cavity c);

struct ElementaryOp {
    OpKind kind = OpKind::U;
    Cavity system = Cavity::A;
    Cavity partner = Cavity::B;  // Q only: photon moves system -> partner
    int from = 2;                // R, U only
    int to = 3;
    Convention convention = Convention::Ideal;

    static ElementaryOp r(Cavity system, int from, int to);
    static ElementaryOp u(Cavity system, int from, int to);
    static ElementaryOp q(Cavity from, Cavity to);

    friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

std::string to_string(const ElementaryOp& op);

struct PlacedUnitary {
    std::vector<std::size_t> targets;
    LocalUnitary unitary;
};

/// R couples |2,0⟩ with |1,1⟩ (levels {1,2}) or |3,1⟩ (levels {2,3}) on
/// (photon, atom); U swaps two atomic levels; Q swaps two photon modes.
/// The physical convention multiplies every exchanged component by i.
/// Throws LevelError for levels the atom does not have.
PlacedUnitary elementary_unitary(const ElementaryOp& op);

}  // namespace qpu::physics

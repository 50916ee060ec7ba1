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


#include "qpu/physics/elementary.hpp"

#include <algorithm>
#include <utility>

#include "qpu/core/error.hpp"

namespace qpu::physics {
namespace {

// Lowest physical label of each subsystem (the dot counts from 1).
constexpr std::array<int, 6> kLabelOffset{0, 0, 0, 1, 0, 0};

// Basis position of a physical atomic level; LevelError if absent.
std::size_t atom_level_index(std::size_t atom, int level) {
    const int idx = level - kLabelOffset[atom];
    const std::size_t dim = protocol_shape().dim(atom);
    if (idx < 0 || static_cast<std::size_t>(idx) >= dim) {
        throw LevelError(atom, static_cast<std::size_t>(std::max(level, 0)), dim);
    }
    return static_cast<std::size_t>(idx);
}

// Exchange matrix: identity except for the listed index pairs.
LocalUnitary exchange(std::vector<std::size_t> dims, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                      Convention convention) {
    std::size_t n = 1;
    for (const auto d : dims) {
        n *= d;
    }
    DenseMatrix<Amplitude> m = DenseMatrix<Amplitude>::Identity(static_cast<Eigen::Index>(n),
                                                                static_cast<Eigen::Index>(n));
    const Amplitude factor = convention == Convention::Physical ? Amplitude(0, 1) : Amplitude(1);
    for (const auto& [x, y] : pairs) {
        const auto i = static_cast<Eigen::Index>(x);
        const auto j = static_cast<Eigen::Index>(y);
        m(i, i) = m(j, j) = 0;
        m(i, j) = m(j, i) = factor;
    }
    return LocalUnitary(std::move(dims), std::move(m));
}

}  // namespace

const SubsystemShape& protocol_shape() {
    static const SubsystemShape shape{2, 4, 2, 3, 2, 4};
    return shape;
}

std::size_t configuration_index(const Configuration& config) {
    std::array<std::size_t, 6> levels{};
    for (std::size_t i = 0; i < 6; ++i) {
        const int idx = config[i] - kLabelOffset[i];
        if (idx < 0) {
            throw LevelError(i, static_cast<std::size_t>(std::max(config[i], 0)), protocol_shape().dim(i));
        }
        levels[i] = static_cast<std::size_t>(idx);
    }
    return protocol_shape().index_of(levels);
}

Configuration configuration_at(std::size_t index) {
    const auto levels = protocol_shape().levels_of(index);
    Configuration config{};
    for (std::size_t i = 0; i < 6; ++i) {
        config[i] = static_cast<int>(levels[i]) + kLabelOffset[i];
    }
    return config;
}

std::string to_string(const Configuration& config) {
    std::string out = "|";
    for (std::size_t i = 0; i < config.size(); ++i) {
        out += std::to_string(config[i]);
        out += i + 1 < config.size() ? "," : "⟩";
    }
    return out;
}

int excitation_count(const Configuration& config) {
    int count = config[kPhotonA] + config[kPhotonB] + config[kPhotonC];
    for (const auto atom : {kMemA, kDotB, kMemC}) {
        count += config[atom] >= 2 ? 1 : 0;
    }
    return count;
}

char cavity_name(Cavity c) { return static_cast<char>('a' + static_cast<int>(c)); }

std::size_t photon_of(Cavity c) { return 2 * static_cast<std::size_t>(c); }

std::size_t atom_of(Cavity c) { return 2 * static_cast<std::size_t>(c) + 1; }

ElementaryOp ElementaryOp::r(Cavity system, int from, int to) {
    return ElementaryOp{OpKind::R, system, system, from, to, Convention::Ideal};
}

ElementaryOp ElementaryOp::u(Cavity system, int from, int to) {
    return ElementaryOp{OpKind::U, system, system, from, to, Convention::Ideal};
}

ElementaryOp ElementaryOp::q(Cavity from, Cavity to) {
    return ElementaryOp{OpKind::Q, from, to, 0, 0, Convention::Ideal};
}

std::string to_string(const ElementaryOp& op) {
    switch (op.kind) {
        case OpKind::Q:
            return std::string("Q_") + cavity_name(op.system) + cavity_name(op.partner);
        case OpKind::R:
        case OpKind::U:
            return std::string(op.kind == OpKind::R ? "R" : "U") + std::to_string(op.from) + std::to_string(op.to) +
                   "^(" + cavity_name(op.system) + ")";
    }
    return {};
}

PlacedUnitary elementary_unitary(const ElementaryOp& op) {
    const auto& shape = protocol_shape();
    switch (op.kind) {
        case OpKind::Q: {
            if (op.system == op.partner) {
                throw DimensionError("Q needs two distinct cavities");
            }
            // basis |n_from, n_to⟩: |1,0⟩ (2) <-> |0,1⟩ (1)
            return {{photon_of(op.system), photon_of(op.partner)}, exchange({2, 2}, {{1, 2}}, op.convention)};
        }
        case OpKind::U: {
            const std::size_t atom = atom_of(op.system);
            if (op.from == op.to) {
                throw DimensionError("U needs two distinct levels");
            }
            const auto i = atom_level_index(atom, op.from);
            const auto j = atom_level_index(atom, op.to);
            return {{atom}, exchange({shape.dim(atom)}, {{i, j}}, op.convention)};
        }
        case OpKind::R: {
            const std::size_t atom = atom_of(op.system);
            const std::size_t photon = photon_of(op.system);
            const int lo = std::min(op.from, op.to);
            const int hi = std::max(op.from, op.to);
            if (!((lo == 1 && hi == 2) || (lo == 2 && hi == 3))) {
                throw DimensionError("R couples levels {1,2} or {2,3}, got " + std::to_string(op.from) +
                                     std::to_string(op.to));
            }
            const std::size_t dim = shape.dim(atom);
            const auto upper = atom_level_index(atom, 2);
            const auto other = atom_level_index(atom, lo == 1 ? 1 : 3);
            // basis |n, level⟩ on (photon, atom): |0, 2⟩ <-> |1, other⟩
            return {{photon, atom}, exchange({2, dim}, {{upper, dim + other}}, op.convention)};
        }
    }
    throw DimensionError("unknown elementary operation");
}

}  // namespace qpu::physics

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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qpu/core/error.hpp"
#include "qpu/core/local_unitary.hpp"
#include "qpu/core/random_source.hpp"
#include "qpu/core/state_vector.hpp"

namespace qpu {

namespace detail {

inline void check_targets(const SubsystemShape& shape, std::span<const std::size_t> targets,
                          const std::vector<std::size_t>& op_dims) {
    if (targets.size() != op_dims.size()) {
        throw DimensionError("operator acts on " + std::to_string(op_dims.size()) +
                             " subsystems but " + std::to_string(targets.size()) +
                             " targets were given");
    }
    for (std::size_t j = 0; j < targets.size(); ++j) {
        if (targets[j] >= shape.size()) {
            throw DimensionError("target subsystem " + std::to_string(targets[j]) +
                                 " does not exist");
        }
        if (shape.dim(targets[j]) != op_dims[j]) {
            throw DimensionError("target subsystem " + std::to_string(targets[j]) +
                                 " has dimension " + std::to_string(shape.dim(targets[j])) +
                                 ", operator expects " + std::to_string(op_dims[j]));
        }
        for (std::size_t k = 0; k < j; ++k) {
            if (targets[k] == targets[j]) {
                throw DimensionError("duplicate target subsystem " + std::to_string(targets[j]));
            }
        }
    }
}

/// Offsets of the local basis states (row-major over `targets`) in the full index.
inline std::vector<std::size_t> local_offsets(const SubsystemShape& shape,
                                              std::span<const std::size_t> targets) {
    std::vector<std::size_t> offsets{0};
    for (const std::size_t t : targets) {
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * shape.dim(t));
        for (const std::size_t base : offsets) {
            for (std::size_t level = 0; level < shape.dim(t); ++level) {
                next.push_back(base + level * shape.stride(t));
            }
        }
        offsets = std::move(next);
    }
    return offsets;
}

}  // namespace detail

/// (I ⊗ … ⊗ U ⊗ …)|ψ⟩ with U routed to `targets` (in operator order).
template <typename Scalar>
BasicStateVector<Scalar> apply_local(const BasicStateVector<Scalar>& state,
                                     const BasicLocalUnitary<Scalar>& u,
                                     std::span<const std::size_t> targets) {
    const SubsystemShape& shape = state.shape();
    detail::check_targets(shape, targets, u.dims());

    const std::vector<std::size_t> offsets = detail::local_offsets(shape, targets);
    const auto local_dim = static_cast<Eigen::Index>(offsets.size());
    const auto& in = state.amplitudes();
    DenseVector<Scalar> out = in;
    DenseVector<Scalar> gathered(local_dim);

    for (std::size_t base = 0; base < shape.total_dimension(); ++base) {
        const bool is_base = std::all_of(targets.begin(), targets.end(), [&](std::size_t t) {
            return shape.level_at(base, t) == 0;
        });
        if (!is_base) {
            continue;
        }
        for (Eigen::Index k = 0; k < local_dim; ++k) {
            gathered(k) = in(static_cast<Eigen::Index>(base + offsets[k]));
        }
        const DenseVector<Scalar> transformed = u.matrix() * gathered;
        for (Eigen::Index k = 0; k < local_dim; ++k) {
            out(static_cast<Eigen::Index>(base + offsets[k])) = transformed(k);
        }
    }

    const auto before = state.norm_squared();
    const auto after = out.squaredNorm();
    if (std::abs(after - before) > detail::normalization_tolerance<decltype(after)>()) {
        throw NormalizationError("local operator changed the norm: operator is not unitary");
    }
    if (std::abs(before - 1) <= detail::normalization_tolerance<decltype(before)>()) {
        return BasicStateVector<Scalar>(shape, std::move(out));
    }
    return BasicStateVector<Scalar>(shape, std::move(out), unnormalized);
}

template <typename Scalar>
BasicStateVector<Scalar> apply_local(const BasicStateVector<Scalar>& state,
                                     const BasicLocalUnitary<Scalar>& u,
                                     std::initializer_list<std::size_t> targets) {
    return apply_local(state, u, std::span<const std::size_t>(targets.begin(), targets.size()));
}

/// Probability mass of each level of `target`.
template <typename Scalar>
std::vector<typename BasicStateVector<Scalar>::Real> outcome_probabilities(
    const BasicStateVector<Scalar>& state, std::size_t target) {
    const SubsystemShape& shape = state.shape();
    if (target >= shape.size()) {
        throw DimensionError("measured subsystem " + std::to_string(target) + " does not exist");
    }
    std::vector<typename BasicStateVector<Scalar>::Real> probs(shape.dim(target), 0);
    const auto& amps = state.amplitudes();
    for (std::size_t i = 0; i < shape.total_dimension(); ++i) {
        probs[shape.level_at(i, target)] += std::norm(amps(static_cast<Eigen::Index>(i)));
    }
    return probs;
}

template <typename Scalar>
struct BasicMeasurement {
    std::size_t outcome;
    typename BasicStateVector<Scalar>::Real probability;
    BasicStateVector<Scalar> collapsed;
};

using Measurement = BasicMeasurement<Amplitude>;

/// Born-rule measurement of one subsystem in its computational basis.
template <typename Scalar>
BasicMeasurement<Scalar> measure_subsystem(const BasicStateVector<Scalar>& state,
                                           std::size_t target, RandomSource& rng) {
    using Real = typename BasicStateVector<Scalar>::Real;
    const std::vector<Real> probs = outcome_probabilities(state, target);
    Real total = 0;
    for (const Real p : probs) {
        total += p;
    }
    if (total < static_cast<Real>(kPipelineTolerance)) {
        throw MeasurementError("cannot measure a state with zero norm");
    }

    const Real draw = static_cast<Real>(rng.uniform()) * total;
    std::size_t outcome = probs.size() - 1;
    Real cumulative = 0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        cumulative += probs[k];
        if (draw < cumulative && probs[k] > 0) {
            outcome = k;
            break;
        }
    }
    while (probs[outcome] <= 0 && outcome > 0) {
        --outcome;
    }

    const SubsystemShape& shape = state.shape();
    DenseVector<Scalar> amps = state.amplitudes();
    const Real scale = Real(1) / std::sqrt(probs[outcome]);
    for (std::size_t i = 0; i < shape.total_dimension(); ++i) {
        auto& a = amps(static_cast<Eigen::Index>(i));
        a = shape.level_at(i, target) == outcome ? a * scale : Scalar(0);
    }
    return {outcome, probs[outcome] / total, BasicStateVector<Scalar>(shape, std::move(amps))};
}

/// ⟨a|b⟩.
template <typename Scalar>
Scalar inner_product(const BasicStateVector<Scalar>& a, const BasicStateVector<Scalar>& b) {
    if (!(a.shape() == b.shape())) {
        throw DimensionError("inner product of states with different shapes");
    }
    return a.amplitudes().dot(b.amplitudes());
}

/// |⟨a|b⟩|².
template <typename Scalar>
typename BasicStateVector<Scalar>::Real fidelity(const BasicStateVector<Scalar>& a,
                                                 const BasicStateVector<Scalar>& b) {
    return std::norm(inner_product(a, b));
}

}  // namespace qpu

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
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "qpu/core/error.hpp"

namespace qpu {

/// Ordered list of subsystem dimensions of a composite system.
///
/// Basis indices are row-major over the dimensions: the first listed
/// subsystem is the most significant digit, matching left-to-right ket order.
class SubsystemShape {
  public:
    SubsystemShape() = default;

    explicit SubsystemShape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
        if (dims_.empty()) {
            throw DimensionError("subsystem shape must list at least one subsystem");
        }
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            if (dims_[i] < 2) {
                throw DimensionError("subsystem " + std::to_string(i) + " has dimension " +
                                     std::to_string(dims_[i]) + " (must be >= 2)");
            }
        }
        strides_.assign(dims_.size(), 1);
        for (std::size_t i = dims_.size() - 1; i > 0; --i) {
            strides_[i - 1] = strides_[i] * dims_[i];
        }
        total_ = strides_.front() * dims_.front();
    }

    SubsystemShape(std::initializer_list<std::size_t> dims)
        : SubsystemShape(std::vector<std::size_t>(dims)) {}

    /// `count` qubits.
    static SubsystemShape qubits(std::size_t count) {
        return SubsystemShape(std::vector<std::size_t>(count, 2));
    }

    std::size_t size() const noexcept { return dims_.size(); }
    std::size_t dim(std::size_t subsystem) const { return dims_.at(subsystem); }
    std::size_t stride(std::size_t subsystem) const { return strides_.at(subsystem); }
    std::size_t total_dimension() const noexcept { return total_; }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }

    std::size_t index_of(std::span<const std::size_t> levels) const {
        if (levels.size() != dims_.size()) {
            throw DimensionError("expected " + std::to_string(dims_.size()) + " levels, got " +
                                 std::to_string(levels.size()));
        }
        std::size_t index = 0;
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            if (levels[i] >= dims_[i]) {
                throw LevelError(i, levels[i], dims_[i]);
            }
            index += levels[i] * strides_[i];
        }
        return index;
    }

    std::vector<std::size_t> levels_of(std::size_t index) const {
        if (index >= total_) {
            throw DimensionError("basis index " + std::to_string(index) + " out of range");
        }
        std::vector<std::size_t> levels(dims_.size());
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            levels[i] = (index / strides_[i]) % dims_[i];
        }
        return levels;
    }

    std::size_t level_at(std::size_t index, std::size_t subsystem) const {
        return (index / strides_.at(subsystem)) % dims_[subsystem];
    }

    friend bool operator==(const SubsystemShape& a, const SubsystemShape& b) {
        return a.dims_ == b.dims_;
    }

  private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 0;
};

}  // namespace qpu

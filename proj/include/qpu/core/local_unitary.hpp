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

#include <complex>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qpu/core/error.hpp"
#include "qpu/core/state_vector.hpp"

namespace qpu {

/// Square operator acting on an ordered group of subsystems.
///
/// `dims` lists the dimensions of the subsystems it acts on; the matrix is
/// indexed row-major over them, first entry most significant.
template <typename Scalar>
class BasicLocalUnitary {
  public:
    using Real = typename Eigen::NumTraits<Scalar>::Real;
    using Matrix = DenseMatrix<Scalar>;

    BasicLocalUnitary(std::vector<std::size_t> dims, Matrix entries)
        : dims_(std::move(dims)), m_(std::move(entries)) {
        if (dims_.empty()) {
            throw DimensionError("local operator must act on at least one subsystem");
        }
        const std::size_t n = std::accumulate(dims_.begin(), dims_.end(), std::size_t{1},
                                              std::multiplies<>());
        if (m_.rows() != m_.cols()) {
            throw DimensionError("local operator matrix is not square");
        }
        if (static_cast<std::size_t>(m_.rows()) != n) {
            throw DimensionError("local operator has size " + std::to_string(m_.rows()) +
                                 " but its subsystems span " + std::to_string(n));
        }
    }

    /// Operator on `count` qubits.
    static BasicLocalUnitary on_qubits(std::size_t count, Matrix entries) {
        return BasicLocalUnitary(std::vector<std::size_t>(count, 2), std::move(entries));
    }

    static BasicLocalUnitary identity(std::vector<std::size_t> dims) {
        const auto n = static_cast<Eigen::Index>(
            std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>()));
        return BasicLocalUnitary(std::move(dims), Matrix::Identity(n, n));
    }

    std::size_t arity() const noexcept { return dims_.size(); }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    const Matrix& matrix() const noexcept { return m_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    Scalar operator()(std::size_t row, std::size_t col) const {
        return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    /// `*this` applied after `rhs` (matrix product this·rhs).
    friend BasicLocalUnitary operator*(const BasicLocalUnitary& lhs, const BasicLocalUnitary& rhs) {
        if (lhs.dims_ != rhs.dims_) {
            throw DimensionError("cannot compose local operators over different subsystems");
        }
        return BasicLocalUnitary(lhs.dims_, lhs.m_ * rhs.m_);
    }

    BasicLocalUnitary adjoint() const { return BasicLocalUnitary(dims_, m_.adjoint()); }

  private:
    std::vector<std::size_t> dims_;
    Matrix m_;
};

using LocalUnitary = BasicLocalUnitary<Amplitude>;

/// Largest entrywise deviation of U†U from the identity.
template <typename Scalar>
typename BasicLocalUnitary<Scalar>::Real unitarity_defect(const BasicLocalUnitary<Scalar>& u) {
    using Matrix = typename BasicLocalUnitary<Scalar>::Matrix;
    const Matrix residual =
        u.matrix().adjoint() * u.matrix() - Matrix::Identity(u.matrix().rows(), u.matrix().cols());
    return residual.cwiseAbs().maxCoeff();
}

template <typename Scalar>
bool is_unitary(const BasicLocalUnitary<Scalar>& u, double tol = kAlgebraTolerance) {
    return unitarity_defect(u) <= tol;
}

}  // namespace qpu
